#include "oracles.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace oracle {

namespace {

int best_in(std::uint32_t candidates, const std::vector<std::uint32_t>& nbr) {
  if (candidates == 0) return 0;
  int v = std::countr_zero(candidates);
  std::uint32_t rest = candidates & ~(1U << v);
  int without = best_in(rest, nbr);
  int with = 1 + best_in(rest & ~nbr[v], nbr);
  return std::max(with, without);
}

}  // namespace

int brute_force_alpha(int n, const std::function<bool(int, int)>& adj) {
  if (n < 0 || n > 30) throw std::invalid_argument("brute_force_alpha handles at most 30 vertices");
  std::vector<std::uint32_t> nbr(n, 0);
  std::uint32_t usable = 0;
  for (int u = 0; u < n; ++u) {
    if (!adj(u, u)) usable |= 1U << u;
    for (int v = 0; v < n; ++v) {
      if (u != v && adj(u, v)) nbr[u] |= 1U << v;
    }
  }
  return best_in(usable, nbr);
}

int transfer_matrix_alpha(int n, const std::vector<int>& jumps) {
  const int L = *std::max_element(jumps.begin(), jumps.end());
  if (L > 10 || n < 2 * L + 1) throw std::invalid_argument("transfer_matrix_alpha out of range");
  const int states = 1 << L;
  // bit k of a window is vertex (i - L + 1 + k), the newest vertex at bit L-1.
  auto conflicts_inside = [&](int w) {
    for (int a = 0; a < L; ++a) {
      for (int b = a + 1; b < L; ++b) {
        if ((w >> a & 1) && (w >> b & 1) && std::find(jumps.begin(), jumps.end(), b - a) != jumps.end()) {
          return true;
        }
      }
    }
    return false;
  };
  int best = 0;
  for (int first = 0; first < states; ++first) {
    if (conflicts_inside(first)) continue;
    std::vector<int> dp(states, -1);
    dp[first] = std::popcount(static_cast<unsigned>(first));
    for (int i = L; i < n; ++i) {
      std::vector<int> next(states, -1);
      for (int w = 0; w < states; ++w) {
        if (dp[w] < 0) continue;
        for (int x = 0; x <= 1; ++x) {
          if (x == 1) {
            bool ok = true;
            for (int d : jumps) {
              if (w >> (L - d) & 1) ok = false;  // vertex i - d sits at bit L - d
            }
            if (!ok) continue;
          }
          int nw = (w >> 1) | (x << (L - 1));
          next[nw] = std::max(next[nw], dp[w] + x);
        }
      }
      dp = std::move(next);
    }
    for (int last = 0; last < states; ++last) {
      if (dp[last] < 0) continue;
      bool ok = true;
      // last bit k is vertex n - L + k; first bit j is vertex j.
      for (int k = 0; k < L && ok; ++k) {
        if (!(last >> k & 1)) continue;
        for (int j = 0; j < L && ok; ++j) {
          if (!(first >> j & 1)) continue;
          int dist = j + L - k;  // (j + n) - (n - L + k)
          if (std::find(jumps.begin(), jumps.end(), dist) != jumps.end()) ok = false;
        }
      }
      if (ok) best = std::max(best, dp[last]);
    }
  }
  return best;
}

SignFractions sampled_rho(const std::vector<int>& jumps, const std::vector<Complex>& coeffs,
                          std::int64_t samples) {
  std::int64_t plus = 0;
  std::int64_t minus = 0;
  for (std::int64_t k = 0; k < samples; ++k) {
    double theta = 2.0 * std::numbers::pi * (static_cast<double>(k) + 0.5) / static_cast<double>(samples);
    double v = 0.0;
    for (std::size_t i = 0; i < jumps.size(); ++i) {
      v += coeffs[i].real() * std::cos(jumps[i] * theta) - coeffs[i].imag() * std::sin(jumps[i] * theta);
    }
    if (v > 0) ++plus;
    if (v < 0) ++minus;
  }
  return {static_cast<double>(plus) / samples, static_cast<double>(minus) / samples};
}

SignFractions monte_carlo_torus_rho(const std::vector<std::vector<int>>& vectors,
                                    const std::vector<Complex>& coeffs, std::int64_t points,
                                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  const std::size_t m = vectors.front().size();
  std::vector<double> theta(m);
  std::int64_t plus = 0;
  std::int64_t minus = 0;
  for (std::int64_t p = 0; p < points; ++p) {
    for (auto& t : theta) t = angle(rng);
    double v = 0.0;
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      double phase = 0.0;
      for (std::size_t k = 0; k < m; ++k) phase += vectors[i][k] * theta[k];
      v += (coeffs[i] * std::polar(1.0, phase)).real();
    }
    if (v > 0) ++plus;
    if (v < 0) ++minus;
  }
  return {static_cast<double>(plus) / points, static_cast<double>(minus) / points};
}

std::vector<Complex> circulant_matrix(int n, const std::vector<int>& jumps,
                                      const std::vector<Complex>& coeffs) {
  std::vector<Complex> a(static_cast<std::size_t>(n) * n);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      for (std::size_t i = 0; i < jumps.size(); ++i) {
        if (((v - u - jumps[i]) % n + n) % n == 0) a[u * n + v] += coeffs[i];
        if (((u - v - jumps[i]) % n + n) % n == 0) a[u * n + v] += std::conj(coeffs[i]);
      }
    }
  }
  return a;
}

std::vector<double> eigen_reference(int dim, const std::vector<Complex>& entries) {
  Eigen::MatrixXcd m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) m(i, j) = entries[static_cast<std::size_t>(i) * dim + j];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + dim);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle
