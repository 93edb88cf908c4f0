#include "signbound/domain.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "signbound/error.hpp"

namespace signbound {

namespace {

IntVector negated(const IntVector& v) {
  IntVector out(v.size());
  std::transform(v.begin(), v.end(), out.begin(), [](std::int64_t x) { return -x; });
  return out;
}

// e^{2 pi i r / n} for r already reduced into [0, n).
Complex unit_root(std::int64_t r, std::int64_t n) {
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(n));
}

std::int64_t mod(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

// ---------------------------------------------------------------- DifferenceSet

DifferenceSet::DifferenceSet(std::vector<std::int64_t> jumps) : jumps_(std::move(jumps)) {
  if (jumps_.empty()) throw InvalidInput("difference set must be non-empty");
  std::sort(jumps_.begin(), jumps_.end());
  jumps_.erase(std::unique(jumps_.begin(), jumps_.end()), jumps_.end());
  if (jumps_.front() < 1) throw InvalidInput("difference set elements must be >= 1");
}

bool DifferenceSet::contains(std::int64_t d) const {
  return std::binary_search(jumps_.begin(), jumps_.end(), d);
}

DifferenceSet DifferenceSet::union_with(const DifferenceSet& other) const {
  std::vector<std::int64_t> all = jumps_;
  all.insert(all.end(), other.jumps_.begin(), other.jumps_.end());
  return DifferenceSet(std::move(all));
}

// --------------------------------------------------------- VectorDifferenceSet

VectorDifferenceSet::VectorDifferenceSet(std::size_t dim, std::vector<IntVector> vectors)
    : dim_(dim), vectors_(std::move(vectors)) {
  if (dim_ == 0) throw InvalidInput("vector difference set needs dimension >= 1");
  if (vectors_.empty()) throw InvalidInput("vector difference set must be non-empty");
  for (const auto& v : vectors_) {
    if (v.size() != dim_) {
      throw InvalidInput("difference vector of length " + std::to_string(v.size()) +
                         " in dimension " + std::to_string(dim_));
    }
    if (std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; })) {
      throw InvalidInput("zero vector is not allowed in a difference set");
    }
    for (std::int64_t x : v) max_abs_ = std::max(max_abs_, x < 0 ? -x : x);
  }
  std::sort(vectors_.begin(), vectors_.end());
  vectors_.erase(std::unique(vectors_.begin(), vectors_.end()), vectors_.end());
  for (const auto& v : vectors_) {
    if (!contains(negated(v))) throw InvalidInput("difference set is not closed under negation");
  }
}

VectorDifferenceSet VectorDifferenceSet::symmetric_closure(std::size_t dim,
                                                           std::vector<IntVector> vectors) {
  std::size_t count = vectors.size();
  for (std::size_t i = 0; i < count; ++i) vectors.push_back(negated(vectors[i]));
  return VectorDifferenceSet(dim, std::move(vectors));
}

bool VectorDifferenceSet::contains(const IntVector& v) const {
  return std::binary_search(vectors_.begin(), vectors_.end(), v);
}

std::size_t VectorDifferenceSet::index_of(const IntVector& v) const {
  auto it = std::lower_bound(vectors_.begin(), vectors_.end(), v);
  if (it == vectors_.end() || *it != v) return vectors_.size();
  return static_cast<std::size_t>(it - vectors_.begin());
}

// ------------------------------------------------------------ DifferenceMatrix

DifferenceMatrix::DifferenceMatrix(std::size_t m, std::vector<Entry> entries)
    : m_(m), entries_(std::move(entries)) {
  if (m_ == 0) throw InvalidInput("matrix of differences needs m >= 1");
  if (entries_.size() != m_ * m_) throw InvalidInput("matrix of differences must be m x m");
  for (std::size_t i = 0; i < m_; ++i) {
    for (std::size_t j = 0; j < m_; ++j) {
      Entry reflected;
      for (std::int64_t d : at(i, j)) reflected.insert(-d);
      if (reflected != at(j, i)) {
        throw InvalidInput("D_" + std::to_string(j) + std::to_string(i) + " != -D_" +
                           std::to_string(i) + std::to_string(j));
      }
      if (!at(i, j).empty()) max_d_ = std::max(max_d_, *at(i, j).rbegin());
    }
  }
}

bool DifferenceMatrix::all_empty() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Entry& e) { return e.empty(); });
}

// -------------------------------------------------------------------- TrigPoly

TrigPoly::TrigPoly(DifferenceSet support, std::vector<Complex> coeffs)
    : support_(std::move(support)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != support_.size()) {
    throw InvalidInput("coefficient count does not match the support");
  }
}

TrigPoly TrigPoly::from_terms(const std::map<std::int64_t, Complex>& terms) {
  std::vector<std::int64_t> jumps;
  std::vector<Complex> coeffs;
  for (const auto& [d, c] : terms) {
    jumps.push_back(d);
    coeffs.push_back(c);
  }
  return TrigPoly(DifferenceSet(std::move(jumps)), std::move(coeffs));
}

Complex TrigPoly::coeff(std::int64_t d) const {
  const auto& jumps = support_.jumps();
  auto it = std::lower_bound(jumps.begin(), jumps.end(), d);
  if (it == jumps.end() || *it != d) return {};
  return coeffs_[static_cast<std::size_t>(it - jumps.begin())];
}

Complex TrigPoly::value(Complex z) const {
  Complex sum{};
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    sum += coeffs_[i] * std::pow(z, static_cast<double>(support_.jumps()[i]));
  }
  return sum;
}

Complex TrigPoly::value_at_angle(double theta) const {
  Complex sum{};
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    sum += coeffs_[i] * std::polar(1.0, static_cast<double>(support_.jumps()[i]) * theta);
  }
  return sum;
}

Complex TrigPoly::value_at_root_of_unity(std::int64_t k, std::int64_t n) const {
  Complex sum{};
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    sum += coeffs_[i] * unit_root(mod(support_.jumps()[i] * k, n), n);
  }
  return sum;
}

double TrigPoly::re_at_angle(double theta) const {
  double sum = 0.0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    double arg = static_cast<double>(support_.jumps()[i]) * theta;
    sum += coeffs_[i].real() * std::cos(arg) - coeffs_[i].imag() * std::sin(arg);
  }
  return sum;
}

double TrigPoly::re_derivative_at_angle(double theta) const {
  double sum = 0.0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    double d = static_cast<double>(support_.jumps()[i]);
    double arg = d * theta;
    sum -= d * (coeffs_[i].real() * std::sin(arg) + coeffs_[i].imag() * std::cos(arg));
  }
  return sum;
}

double TrigPoly::norm_squared() const {
  double s = 0.0;
  for (const auto& c : coeffs_) s += std::norm(c);
  return s;
}

double TrigPoly::abs_sum() const {
  double s = 0.0;
  for (const auto& c : coeffs_) s += std::abs(c);
  return s;
}

bool TrigPoly::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Complex c) { return c == Complex{}; });
}

bool TrigPoly::is_normalized(double tol) const { return std::abs(norm_squared() - 1.0) <= tol; }

TrigPoly TrigPoly::scaled(Complex factor) const {
  std::vector<Complex> c = coeffs_;
  for (auto& x : c) x *= factor;
  return TrigPoly(support_, std::move(c));
}

TrigPoly TrigPoly::rotated(Complex w) const {
  std::vector<Complex> c = coeffs_;
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] *= std::pow(w, static_cast<double>(support_.jumps()[i]));
  }
  return TrigPoly(support_, std::move(c));
}

// --------------------------------------------------------------- MultiTrigPoly

MultiTrigPoly::MultiTrigPoly(VectorDifferenceSet support, std::vector<Complex> coeffs)
    : support_(std::move(support)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != support_.size()) {
    throw InvalidInput("coefficient count does not match the support");
  }
  double scale = 0.0;
  for (const auto& c : coeffs_) scale = std::max(scale, std::abs(c));
  if (scale == 0.0) throw InvalidInput("multivariate polynomial is identically zero");
  const auto& vecs = support_.vectors();
  for (std::size_t i = 0; i < vecs.size(); ++i) {
    std::size_t j = support_.index_of(negated(vecs[i]));
    if (std::abs(coeffs_[j] - std::conj(coeffs_[i])) > 1e-12 * scale) {
      throw InvalidInput("coefficients violate c_{-d} = conj(c_d)");
    }
  }
}

Complex MultiTrigPoly::value_at_angles(std::span<const double> theta) const {
  if (theta.size() != dim()) throw InvalidInput("angle count does not match dimension");
  Complex sum{};
  const auto& vecs = support_.vectors();
  for (std::size_t i = 0; i < vecs.size(); ++i) {
    double arg = 0.0;
    for (std::size_t k = 0; k < dim(); ++k) arg += static_cast<double>(vecs[i][k]) * theta[k];
    sum += coeffs_[i] * std::polar(1.0, arg);
  }
  return sum;
}

Complex MultiTrigPoly::value_at_root_index(std::span<const std::int64_t> j, std::int64_t n) const {
  if (j.size() != dim()) throw InvalidInput("index count does not match dimension");
  Complex sum{};
  const auto& vecs = support_.vectors();
  for (std::size_t i = 0; i < vecs.size(); ++i) {
    std::int64_t r = 0;
    for (std::size_t k = 0; k < dim(); ++k) r = mod(r + mod(vecs[i][k], n) * j[k], n);
    sum += coeffs_[i] * unit_root(r, n);
  }
  return sum;
}

double MultiTrigPoly::norm_squared() const {
  double s = 0.0;
  for (const auto& c : coeffs_) s += std::norm(c);
  return s;
}

double MultiTrigPoly::abs_sum() const {
  double s = 0.0;
  for (const auto& c : coeffs_) s += std::abs(c);
  return s;
}

MultiTrigPoly MultiTrigPoly::scaled(double factor) const {
  std::vector<Complex> c = coeffs_;
  for (auto& x : c) x *= factor;
  return MultiTrigPoly(support_, std::move(c));
}

// ----------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(const std::map<std::int64_t, Complex>& terms) {
  for (const auto& [k, c] : terms) add_term(k, c);
}

LaurentPoly LaurentPoly::constant(Complex c) { return monomial(c, 0); }

LaurentPoly LaurentPoly::monomial(Complex c, std::int64_t exponent) {
  LaurentPoly p;
  p.add_term(exponent, c);
  return p;
}

void LaurentPoly::add_term(std::int64_t k, Complex c) {
  if (c == Complex{}) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == Complex{}) terms_.erase(it);
  }
}

Complex LaurentPoly::coeff(std::int64_t k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Complex{} : it->second;
}

std::int64_t LaurentPoly::min_exponent() const {
  return terms_.empty() ? 0 : terms_.begin()->first;
}

std::int64_t LaurentPoly::max_exponent() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first;
}

double LaurentPoly::abs_sum() const {
  double s = 0.0;
  for (const auto& [k, c] : terms_) s += std::abs(c);
  return s;
}

Complex LaurentPoly::operator()(Complex z) const {
  Complex sum{};
  for (const auto& [k, c] : terms_) sum += c * std::pow(z, static_cast<double>(k));
  return sum;
}

Complex LaurentPoly::at_root_of_unity(std::int64_t k, std::int64_t n) const {
  Complex sum{};
  for (const auto& [e, c] : terms_) sum += c * unit_root(mod(mod(e, n) * mod(k, n), n), n);
  return sum;
}

LaurentPoly LaurentPoly::conjugate() const {
  LaurentPoly out;
  for (const auto& [k, c] : terms_) out.terms_.emplace(-k, std::conj(c));
  return out;
}

LaurentPoly LaurentPoly::trimmed(double tol) const {
  LaurentPoly out;
  for (const auto& [k, c] : terms_) {
    if (std::abs(c) > tol) out.terms_.emplace(k, c);
  }
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [k, c] : other.terms_) add_term(k, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [k, c] : other.terms_) add_term(k, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) out.add_term(ka + kb, ca * cb);
  }
  return out;
}

LaurentPoly operator*(Complex s, const LaurentPoly& a) {
  LaurentPoly out;
  for (const auto& [k, c] : a.terms_) out.add_term(k, s * c);
  return out;
}

// --------------------------------------------------------------- LaurentMatrix

LaurentMatrix::LaurentMatrix(std::size_t m, std::vector<LaurentPoly> entries)
    : m_(m), entries_(std::move(entries)) {
  if (m_ == 0) throw InvalidInput("Laurent matrix needs m >= 1");
  if (entries_.size() != m_ * m_) throw InvalidInput("Laurent matrix must be m x m");
}

bool LaurentMatrix::is_self_conjugate(double tol) const {
  double scale = 0.0;
  for (const auto& p : entries_) {
    for (const auto& [k, c] : p.terms()) scale = std::max(scale, std::abs(c));
  }
  double limit = tol * std::max(scale, 1e-300);
  for (std::size_t i = 0; i < m_; ++i) {
    for (std::size_t j = i; j < m_; ++j) {
      LaurentPoly diff = at(j, i) - at(i, j).conjugate();
      for (const auto& [k, c] : diff.terms()) {
        if (std::abs(c) > limit) return false;
      }
    }
  }
  return true;
}

bool LaurentMatrix::majorized_by(const DifferenceMatrix& diffs) const {
  if (diffs.m() != m_) return false;
  for (std::size_t i = 0; i < m_; ++i) {
    for (std::size_t j = 0; j < m_; ++j) {
      for (const auto& [k, c] : at(i, j).terms()) {
        if (!diffs.at(i, j).contains(k)) return false;
      }
    }
  }
  return true;
}

std::int64_t LaurentMatrix::max_abs_exponent() const {
  std::int64_t best = 0;
  for (const auto& p : entries_) {
    for (const auto& [k, c] : p.terms()) best = std::max(best, k < 0 ? -k : k);
  }
  return best;
}

double LaurentMatrix::row_bound() const {
  double best = 0.0;
  for (std::size_t i = 0; i < m_; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < m_; ++j) row += at(i, j).abs_sum();
    best = std::max(best, row);
  }
  return best;
}

std::vector<Complex> LaurentMatrix::evaluate(Complex z) const {
  std::vector<Complex> out(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) out[i] = entries_[i](z);
  return out;
}

std::vector<Complex> LaurentMatrix::evaluate_at_root(std::int64_t k, std::int64_t n) const {
  std::vector<Complex> out(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) out[i] = entries_[i].at_root_of_unity(k, n);
  return out;
}

}  // namespace signbound
