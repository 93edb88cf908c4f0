#include "signbound/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "signbound/error.hpp"

namespace signbound {

namespace {

constexpr std::int64_t kMaxDenseDim = 512;

std::int64_t mod(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

void require_self_conjugate(const LaurentMatrix& f) {
  if (!f.is_self_conjugate(1e-12)) throw InvalidInput("Laurent matrix is not self-conjugate");
}

std::vector<double> eigen_of_entries(std::size_t m, std::vector<Complex> entries) {
  // Rounding can leave ~1e-16 asymmetry; the tolerance only guards against
  // genuinely non-hermitian input, which the callers have already ruled out.
  return hermitian_eigenvalues(HermitianMatrix(m, std::move(entries), 1e-9));
}

}  // namespace

HermitianMatrix::HermitianMatrix(std::size_t dim, std::vector<Complex> entries, double tol)
    : dim_(dim), entries_(std::move(entries)) {
  if (entries_.size() != dim_ * dim_) throw InvalidInput("hermitian matrix must be dim x dim");
  double scale = 1.0;
  for (const auto& e : entries_) scale = std::max(scale, std::abs(e));
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i; j < dim_; ++j) {
      if (std::abs(entries_[i * dim_ + j] - std::conj(entries_[j * dim_ + i])) > tol * scale) {
        throw InvalidInput("matrix is not hermitian at (" + std::to_string(i) + ", " +
                           std::to_string(j) + ")");
      }
    }
  }
}

std::vector<double> circulant_eigenvalues(const TrigPoly& f, std::int64_t n) {
  if (n < 1) throw InvalidInput("circulant_eigenvalues needs n >= 1");
  std::vector<double> out(static_cast<std::size_t>(n));
  for (std::int64_t j = 0; j < n; ++j) {
    out[static_cast<std::size_t>(j)] = 2.0 * f.value_at_root_of_unity(j, n).real();
  }
  return out;
}

std::vector<double> m_circulant_eigenvalues(const MultiTrigPoly& f, std::int64_t n) {
  if (n < 1) throw InvalidInput("m_circulant_eigenvalues needs n >= 1");
  const std::size_t m = f.dim();
  std::size_t total = 1;
  for (std::size_t k = 0; k < m; ++k) total *= static_cast<std::size_t>(n);
  const double limit = 1e-10 * std::max(f.abs_sum(), 1.0);

  std::vector<double> out(total);
  IntVector j(m, 0);
  for (std::size_t idx = 0; idx < total; ++idx) {
    Complex v = f.value_at_root_index(j, n);
    if (std::abs(v.imag()) > limit) throw InvalidInput("m-circulant eigenvalue is not real");
    out[idx] = v.real();
    for (std::size_t k = m; k-- > 0;) {
      if (++j[k] < n) break;
      j[k] = 0;
    }
  }
  return out;
}

std::vector<double> block_spectrum_at(const LaurentMatrix& f, Complex z) {
  if (std::abs(std::abs(z) - 1.0) > 1e-12) throw InvalidInput("z must lie on the unit circle");
  require_self_conjugate(f);
  auto eig = eigen_of_entries(f.m(), f.evaluate(z));
  std::sort(eig.begin(), eig.end());
  return eig;
}

std::vector<double> block_circulant_eigenvalues(const LaurentMatrix& f, std::int64_t n) {
  if (n < 1) throw InvalidInput("block_circulant_eigenvalues needs n >= 1");
  require_self_conjugate(f);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n) * f.m());
  for (std::int64_t k = 0; k < n; ++k) {
    auto eig = eigen_of_entries(f.m(), f.evaluate_at_root(k, n));
    std::sort(eig.begin(), eig.end());
    out.insert(out.end(), eig.begin(), eig.end());
  }
  return out;
}

HermitianMatrix dense_circulant_matrix(const TrigPoly& f, std::int64_t n) {
  if (n < 2 * f.support().max_d() + 1) {
    throw InvalidInput("dense_circulant_matrix needs n >= 2 max(D) + 1");
  }
  if (n > kMaxDenseDim) throw InvalidInput("dense matrices are limited to dimension 512");
  const auto un = static_cast<std::size_t>(n);
  std::vector<Complex> row(un);
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    auto d = static_cast<std::size_t>(f.support().jumps()[i]);
    row[d] = f.coeffs()[i];
    row[un - d] = std::conj(f.coeffs()[i]);
  }
  std::vector<Complex> entries(un * un);
  for (std::size_t l = 0; l < un; ++l) {
    for (std::size_t r = 0; r < un; ++r) entries[l * un + r] = row[(r + un - l) % un];
  }
  return HermitianMatrix(un, std::move(entries));
}

HermitianMatrix dense_m_circulant_matrix(const MultiTrigPoly& f, std::int64_t n) {
  if (n < 1) throw InvalidInput("dense_m_circulant_matrix needs n >= 1");
  const std::size_t m = f.dim();
  std::size_t total = 1;
  for (std::size_t k = 0; k < m; ++k) {
    total *= static_cast<std::size_t>(n);
    if (total > static_cast<std::size_t>(kMaxDenseDim)) {
      throw InvalidInput("dense matrices are limited to dimension 512");
    }
  }
  auto index_of = [&](const IntVector& c) {
    std::size_t idx = 0;
    for (std::int64_t x : c) idx = idx * static_cast<std::size_t>(n) + static_cast<std::size_t>(mod(x, n));
    return idx;
  };
  // Row 0 holds x_i = sum of c_d over d congruent to i.
  std::vector<Complex> row(total);
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) row[index_of(f.support().vectors()[i])] += f.coeffs()[i];

  std::vector<Complex> entries(total * total);
  IntVector ci(m);
  IntVector diff(m);
  for (std::size_t a = 0; a < total; ++a) {
    std::size_t rest = a;
    for (std::size_t k = m; k-- > 0;) {
      ci[k] = static_cast<std::int64_t>(rest % static_cast<std::size_t>(n));
      rest /= static_cast<std::size_t>(n);
    }
    for (std::size_t b = 0; b < total; ++b) {
      std::size_t rb = b;
      for (std::size_t k = m; k-- > 0;) {
        diff[k] = static_cast<std::int64_t>(rb % static_cast<std::size_t>(n)) - ci[k];
        rb /= static_cast<std::size_t>(n);
      }
      entries[a * total + b] = row[index_of(diff)];
    }
  }
  return HermitianMatrix(total, std::move(entries));
}

HermitianMatrix dense_block_matrix(const LaurentMatrix& f, std::int64_t n) {
  require_self_conjugate(f);
  if (n < 2 * f.max_abs_exponent() + 1) {
    throw InvalidInput("dense_block_matrix needs n >= 2 max(D) + 1");
  }
  const std::size_t m = f.m();
  const auto un = static_cast<std::size_t>(n);
  if (un * m > static_cast<std::size_t>(kMaxDenseDim)) {
    throw InvalidInput("dense matrices are limited to dimension 512");
  }
  const std::size_t dim = un * m;
  std::vector<Complex> entries(dim * dim);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (const auto& [e, c] : f.at(i, j).terms()) {
        for (std::size_t l = 0; l < un; ++l) {
          auto r = static_cast<std::size_t>(mod(static_cast<std::int64_t>(l) + e, n));
          entries[(i * un + l) * dim + (j * un + r)] += c;
        }
      }
    }
  }
  return HermitianMatrix(dim, std::move(entries));
}

std::vector<double> hermitian_eigenvalues(const HermitianMatrix& input) {
  const std::size_t n = input.dim();
  std::vector<Complex> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = 0.5 * (input(i, j) + std::conj(input(j, i)));
  }
  auto at = [&](std::size_t i, std::size_t j) -> Complex& { return a[i * n + j]; };

  double total = 0.0;
  for (const auto& x : a) total += std::norm(x);

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(at(p, q));
    }
    if (off <= 1e-30 * total) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex g = at(p, q);
        const double mag = std::abs(g);
        if (mag == 0.0) continue;
        // Phase the pair so that a_pq is real, then a real Jacobi rotation.
        const Complex phase = g / mag;
        const double tau = (at(q, q).real() - at(p, p).real()) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex u_qp = -s * std::conj(phase);
        const Complex u_qq = c * std::conj(phase);

        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = at(k, p);
          const Complex akq = at(k, q);
          at(k, p) = akp * c + akq * u_qp;
          at(k, q) = akp * s + akq * u_qq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = at(p, k);
          const Complex aqk = at(q, k);
          at(p, k) = c * apk + std::conj(u_qp) * aqk;
          at(q, k) = s * apk + std::conj(u_qq) * aqk;
        }
        at(p, q) = 0.0;
        at(q, p) = 0.0;
        at(p, p) = at(p, p).real();
        at(q, q) = at(q, q).real();
      }
    }
  }

  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = at(i, i).real();
  std::sort(eig.begin(), eig.end());
  return eig;
}

Signature signature(std::span<const double> eigenvalues, double zero_tol) {
  if (!(zero_tol > 0.0)) throw InvalidInput("signature needs zero_tol > 0");
  Signature s;
  s.zero_tol = zero_tol;
  for (double x : eigenvalues) {
    if (x > zero_tol) {
      ++s.n_plus;
    } else if (x < -zero_tol) {
      ++s.n_minus;
    } else {
      ++s.n_zero;
    }
  }
  return s;
}

double default_zero_tol(std::span<const double> eigenvalues) {
  double radius = 0.0;
  for (double x : eigenvalues) radius = std::max(radius, std::abs(x));
  return radius > 0.0 ? 1e-9 * radius : 1e-9;
}

}  // namespace signbound
