#include "signbound/measure.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "signbound/error.hpp"
#include "signbound/spectra.hpp"

namespace signbound {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Fraction of a cell by which the sampling grid is offset from theta = 0;
// keeps samples away from the rational angles where zeros of integer
// frequency polynomials tend to sit.
constexpr double kGridOffset = 0.3819660112501051;

int sign_of(double x) { return x > 0.0 ? 1 : -1; }

class ArcFinder {
 public:
  ArcFinder(const TrigPoly& f, double refine_tol) : f_(f), tol_(std::max(refine_tol, 1e-14)) {}

  double g(double t) const { return f_.re_at_angle(t); }
  double dg(double t) const { return f_.re_derivative_at_angle(t); }

  void set_flag_threshold(double threshold) { flag_threshold_ = threshold; }

  // Finds the sign changes of g inside [l, r]; depth 0 cells may be
  // sub-sampled once when their endpoint values are small.
  void process_cell(double l, double r, double gl, double gr, int depth) {
    const int sl = sign_of(gl);
    const int sr = sign_of(gr);
    if (sl != sr) {
      bisect(l, r, sl);
      return;
    }
    // Same sign at both ends: look for an interior extremum of the
    // opposite sign via the derivative.
    const double dl = dg(l);
    const double dr = dg(r);
    if (sl * dl < 0.0 && sl * dr > 0.0) {
      double a = l;
      double b = r;
      for (int it = 0; it < 200 && b - a > 1e-15; ++it) {
        double mid = 0.5 * (a + b);
        if (sl * dg(mid) < 0.0) {
          a = mid;
        } else {
          b = mid;
        }
      }
      const double t = 0.5 * (a + b);
      if (sign_of(g(t)) != sl) {
        bisect(l, t, sl);
        bisect(t, r, -sl);
      }
      return;
    }
    if (depth == 0 && std::min(std::abs(gl), std::abs(gr)) < flag_threshold_) {
      ++flagged_;
      const std::size_t before = brackets_.size();
      constexpr int kSub = 8;
      double prev_t = l;
      double prev_g = gl;
      for (int i = 1; i <= kSub; ++i) {
        double t = i == kSub ? r : l + (r - l) * i / kSub;
        double gt = i == kSub ? gr : g(t);
        process_cell(prev_t, t, prev_g, gt, 1);
        prev_t = t;
        prev_g = gt;
      }
      if (brackets_.size() == before) risk_ += r - l;
    }
  }

  const std::vector<std::pair<double, double>>& brackets() const { return brackets_; }
  std::size_t flagged() const { return flagged_; }
  double risk() const { return risk_; }

 private:
  void bisect(double lo, double hi, int sign_lo) {
    while (hi - lo > tol_) {
      double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      if (sign_of(g(mid)) == sign_lo) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    brackets_.emplace_back(lo, hi);
  }

  const TrigPoly& f_;
  double tol_;
  double flag_threshold_ = 0.0;
  std::vector<std::pair<double, double>> brackets_;
  std::size_t flagged_ = 0;
  double risk_ = 0.0;
};

}  // namespace

std::string to_string(RhoMethod method) {
  switch (method) {
    case RhoMethod::RootsOfUnity:
      return "roots-of-unity";
    case RhoMethod::Arcs:
      return "arcs";
    case RhoMethod::Lattice:
      return "lattice";
    case RhoMethod::BlockSample:
      return "block-sample";
  }
  return "unknown";
}

RhoEstimate rho_roots_of_unity(const TrigPoly& f, std::int64_t n) {
  if (f.is_zero()) throw InvalidInput("rho of the zero polynomial is undefined");
  if (n < 1) throw InvalidInput("rho_roots_of_unity needs n >= 1");
  const double tol = 1e-12 * f.abs_sum();
  std::int64_t plus = 0;
  std::int64_t minus = 0;
  for (std::int64_t j = 0; j < n; ++j) {
    double v = f.value_at_root_of_unity(j, n).real();
    if (v > tol) {
      ++plus;
    } else if (v < -tol) {
      ++minus;
    }
  }
  RhoEstimate est;
  est.method = RhoMethod::RootsOfUnity;
  est.resolution = n;
  const auto dn = static_cast<double>(n);
  est.rho_plus = static_cast<double>(plus) / dn;
  est.rho_minus = static_cast<double>(minus) / dn;
  est.unresolved = static_cast<double>(n - plus - minus) / dn;
  // Each of the at most 2 max(D) zeros shifts the counts by at most one
  // point.
  est.resolution_error = 2.0 * static_cast<double>(f.support().max_d()) / dn;
  return est;
}

ArcResult rho_arcs_1d(const TrigPoly& f, double refine_tol, std::int64_t min_samples) {
  if (f.is_zero()) throw InvalidInput("rho of the zero polynomial is undefined");
  if (!(refine_tol > 0.0)) throw InvalidInput("refine_tol must be positive");

  const std::int64_t samples = std::max<std::int64_t>({16 * f.support().max_d(), min_samples, 16});
  const double h = kTwoPi / static_cast<double>(samples);
  const double scale = f.abs_sum();

  std::vector<double> theta(static_cast<std::size_t>(samples) + 1);
  std::vector<double> value(theta.size());
  double max_abs = 0.0;
  for (std::int64_t k = 0; k < samples; ++k) {
    auto idx = static_cast<std::size_t>(k);
    theta[idx] = (static_cast<double>(k) + kGridOffset) * h;
    value[idx] = f.re_at_angle(theta[idx]);
    // Move off samples that land numerically on a zero.
    for (int nudge = 1; nudge <= 4 && std::abs(value[idx]) <= 1e-14 * scale; ++nudge) {
      theta[idx] += 1e-3 * h;
      value[idx] = f.re_at_angle(theta[idx]);
    }
    max_abs = std::max(max_abs, std::abs(value[idx]));
  }
  if (max_abs <= 1e-12 * scale) {
    throw DegenerateInput("Re f is numerically zero on the unit circle");
  }
  theta.back() = theta.front() + kTwoPi;
  value.back() = value.front();

  ArcFinder finder(f, refine_tol);
  finder.set_flag_threshold(1e-7 * max_abs);
  for (std::size_t k = 0; k + 1 < theta.size(); ++k) {
    finder.process_cell(theta[k], theta[k + 1], value[k], value[k + 1], 0);
  }

  ArcResult out;
  RhoEstimate& est = out.estimate;
  est.method = RhoMethod::Arcs;
  est.resolution = samples;
  out.arcs.flagged_cells = finder.flagged();
  out.arcs.missed_pair_risk = finder.risk() / kTwoPi;
  est.resolution_error = out.arcs.missed_pair_risk;

  const auto& br = finder.brackets();
  if (br.empty()) {
    int s = sign_of(value.front());
    out.arcs.arcs.push_back({0.0, kTwoPi, s});
    (s > 0 ? est.rho_plus : est.rho_minus) = 1.0;
    return out;
  }

  double plus = 0.0;
  double minus = 0.0;
  double unresolved = 0.0;
  for (std::size_t i = 0; i < br.size(); ++i) {
    const auto& [lo, hi] = br[i];
    unresolved += hi - lo;
    out.arcs.zeros.push_back(std::fmod(0.5 * (lo + hi), kTwoPi));

    const double start = hi;
    const double end = i + 1 < br.size() ? br[i + 1].first : br.front().first + kTwoPi;
    const double length = std::max(end - start, 0.0);
    const int s = sign_of(f.re_at_angle(0.5 * (start + end)));
    (s > 0 ? plus : minus) += length;
    double wrapped = std::fmod(start, kTwoPi);
    out.arcs.arcs.push_back({wrapped, wrapped + length, s});
  }
  std::sort(out.arcs.zeros.begin(), out.arcs.zeros.end());
  std::sort(out.arcs.arcs.begin(), out.arcs.arcs.end(),
            [](const Arc& a, const Arc& b) { return a.start < b.start; });

  const double total = plus + minus + unresolved;
  est.rho_plus = plus / total;
  est.rho_minus = minus / total;
  est.unresolved = unresolved / total;
  return out;
}

RhoEstimate rho_lattice_md(const MultiTrigPoly& f, std::int64_t lattice_exp) {
  const auto m = static_cast<std::int64_t>(f.dim());
  if (lattice_exp < 0 || lattice_exp * m > 24) {
    throw InvalidInput("rho_lattice_md needs 0 <= lattice_exp and lattice_exp * m <= 24");
  }
  const std::int64_t side = std::int64_t{1} << lattice_exp;
  const std::int64_t mask = side - 1;
  std::vector<Complex> roots(static_cast<std::size_t>(side));
  for (std::int64_t r = 0; r < side; ++r) {
    roots[static_cast<std::size_t>(r)] =
        std::polar(1.0, kTwoPi * static_cast<double>(r) / static_cast<double>(side));
  }

  const auto& vecs = f.support().vectors();
  const auto& coeffs = f.coeffs();
  const double tol = 1e-12 * f.abs_sum();
  const std::int64_t total = std::int64_t{1} << (lattice_exp * m);

  std::int64_t plus = 0;
  std::int64_t minus = 0;
  IntVector a(static_cast<std::size_t>(m), 0);
  for (std::int64_t point = 0; point < total; ++point) {
    double v = 0.0;
    for (std::size_t i = 0; i < vecs.size(); ++i) {
      std::int64_t phase = 0;
      for (std::size_t k = 0; k < a.size(); ++k) phase += vecs[i][k] * a[k];
      const Complex& w = roots[static_cast<std::size_t>(phase & mask)];
      v += coeffs[i].real() * w.real() - coeffs[i].imag() * w.imag();
    }
    if (v > tol) {
      ++plus;
    } else if (v < -tol) {
      ++minus;
    }
    for (std::size_t k = a.size(); k-- > 0;) {
      if (++a[k] < side) break;
      a[k] = 0;
    }
  }

  RhoEstimate est;
  est.method = RhoMethod::Lattice;
  est.resolution = lattice_exp;
  const auto dt = static_cast<double>(total);
  est.rho_plus = static_cast<double>(plus) / dt;
  est.rho_minus = static_cast<double>(minus) / dt;
  est.unresolved = static_cast<double>(total - plus - minus) / dt;
  est.resolution_error = static_cast<double>(m) / static_cast<double>(side);
  return est;
}

LaurentPoly det_laurent(const LaurentMatrix& f) {
  const std::size_t m = f.m();
  if (m > 8) throw InvalidInput("det_laurent supports m <= 8");
  // minors[S] = signed sum over bijections of the first |S| rows onto the
  // column subset S.
  std::vector<LaurentPoly> minors(std::size_t{1} << m);
  minors[0] = LaurentPoly::constant(1.0);
  for (std::size_t used = 0; used + 1 < minors.size(); ++used) {
    if (minors[used].is_zero()) continue;
    const auto row = static_cast<std::size_t>(std::popcount(used));
    for (std::size_t col = 0; col < m; ++col) {
      if (used & (std::size_t{1} << col)) continue;
      if (f.at(row, col).is_zero()) continue;
      const int larger = std::popcount(used >> (col + 1));
      LaurentPoly term = f.at(row, col) * minors[used];
      if (larger % 2 == 0) {
        minors[used | (std::size_t{1} << col)] += term;
      } else {
        minors[used | (std::size_t{1} << col)] -= term;
      }
    }
  }
  return minors.back();
}

bool is_degenerate(const LaurentMatrix& f) {
  double scale = 1.0;
  for (std::size_t i = 0; i < f.m(); ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < f.m(); ++j) row += f.at(i, j).abs_sum();
    scale *= row;
  }
  if (scale == 0.0) return true;
  return det_laurent(f).trimmed(1e-10 * scale).is_zero();
}

RhoEstimate rho_block(const LaurentMatrix& f, std::int64_t n_samples) {
  if (n_samples < 1) throw InvalidInput("rho_block needs n_samples >= 1");
  if (!f.is_self_conjugate(1e-12)) throw InvalidInput("Laurent matrix is not self-conjugate");
  if (is_degenerate(f)) throw InvalidInput("Laurent matrix is degenerate (det F = 0)");

  const std::size_t m = f.m();
  const double tol = 1e-10 * f.row_bound();
  std::int64_t plus = 0;
  std::int64_t minus = 0;
  for (std::int64_t k = 0; k < n_samples; ++k) {
    auto eig = hermitian_eigenvalues(HermitianMatrix(m, f.evaluate_at_root(k, n_samples), 1e-9));
    for (double x : eig) {
      if (x > tol) {
        ++plus;
      } else if (x < -tol) {
        ++minus;
      }
    }
  }
  RhoEstimate est;
  est.method = RhoMethod::BlockSample;
  est.resolution = n_samples;
  const double total = static_cast<double>(n_samples) * static_cast<double>(m);
  est.rho_plus = static_cast<double>(plus) / total;
  est.rho_minus = static_cast<double>(minus) / total;
  est.unresolved = (total - static_cast<double>(plus + minus)) / total;
  LaurentPoly det = det_laurent(f);
  const double span = static_cast<double>(det.max_exponent() - det.min_exponent());
  est.resolution_error = std::max(span, 1.0) / total;
  return est;
}

std::vector<RhoEstimate> rho_partial_sums(std::span<const Complex> coeffs, std::int64_t n_grid,
                                          double refine_tol) {
  if (coeffs.empty()) throw InvalidInput("rho_partial_sums needs at least one coefficient");
  if (std::all_of(coeffs.begin(), coeffs.end(), [](Complex c) { return c == Complex{}; })) {
    throw InvalidInput("rho_partial_sums needs a non-zero coefficient");
  }
  std::vector<RhoEstimate> out;
  std::vector<std::int64_t> jumps;
  std::vector<Complex> prefix;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    jumps.push_back(static_cast<std::int64_t>(k) + 1);
    prefix.push_back(coeffs[k]);
    TrigPoly fk(DifferenceSet(jumps), prefix);
    if (fk.is_zero()) {
      RhoEstimate est;
      est.method = RhoMethod::Arcs;
      est.unresolved = 1.0;
      out.push_back(est);
      continue;
    }
    out.push_back(rho_arcs_1d(fk, refine_tol, n_grid).estimate);
  }
  return out;
}

}  // namespace signbound
