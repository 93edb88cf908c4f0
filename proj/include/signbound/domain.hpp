#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <vector>

#include "signbound/rational.hpp"

namespace signbound {

using Complex = std::complex<double>;
using IntVector = std::vector<std::int64_t>;

/// A finite set D of positive jumps, kept sorted and duplicate-free.
class DifferenceSet {
 public:
  /// Sorts and deduplicates; throws InvalidInput on an empty list or a
  /// non-positive element.
  explicit DifferenceSet(std::vector<std::int64_t> jumps);

  const std::vector<std::int64_t>& jumps() const { return jumps_; }
  std::int64_t max_d() const { return jumps_.back(); }
  std::size_t size() const { return jumps_.size(); }
  bool contains(std::int64_t d) const;

  DifferenceSet union_with(const DifferenceSet& other) const;

  friend bool operator==(const DifferenceSet&, const DifferenceSet&) = default;

 private:
  std::vector<std::int64_t> jumps_;
};

/// A finite set of non-zero integer m-vectors closed under negation.
class VectorDifferenceSet {
 public:
  /// Throws InvalidInput if a vector has the wrong length, is zero, or its
  /// negation is missing.
  VectorDifferenceSet(std::size_t dim, std::vector<IntVector> vectors);

  /// Adds the negation of every given vector before validating.
  static VectorDifferenceSet symmetric_closure(std::size_t dim, std::vector<IntVector> vectors);

  std::size_t dim() const { return dim_; }
  const std::vector<IntVector>& vectors() const { return vectors_; }
  std::size_t size() const { return vectors_.size(); }
  /// Largest absolute coordinate over all vectors.
  std::int64_t max_abs() const { return max_abs_; }
  bool contains(const IntVector& v) const;
  /// Position of v in vectors(), or size() when absent.
  std::size_t index_of(const IntVector& v) const;

 private:
  std::size_t dim_;
  std::vector<IntVector> vectors_;  // sorted lexicographically
  std::int64_t max_abs_ = 0;
};

/// m x m matrix of finite integer sets with D_ji = -D_ij.
class DifferenceMatrix {
 public:
  using Entry = std::set<std::int64_t>;

  /// entries is row-major with m*m sets. Throws InvalidInput on a shape
  /// mismatch or a broken D_ji = -D_ij relation.
  DifferenceMatrix(std::size_t m, std::vector<Entry> entries);

  std::size_t m() const { return m_; }
  const Entry& at(std::size_t i, std::size_t j) const { return entries_[i * m_ + j]; }
  /// max over i, j of max(D_ij); 0 when every entry is empty.
  std::int64_t max_d() const { return max_d_; }
  bool all_empty() const;

 private:
  std::size_t m_;
  std::vector<Entry> entries_;
  std::int64_t max_d_ = 0;
};

/// f(z) = sum_{d in D} c_d z^d. Only the real part on |z| = 1 matters for
/// the sign measures.
class TrigPoly {
 public:
  /// coeffs is aligned with support.jumps(). Zero coefficients are allowed.
  TrigPoly(DifferenceSet support, std::vector<Complex> coeffs);
  /// Builds the support from the keys of terms.
  static TrigPoly from_terms(const std::map<std::int64_t, Complex>& terms);

  const DifferenceSet& support() const { return support_; }
  const std::vector<Complex>& coeffs() const { return coeffs_; }
  Complex coeff(std::int64_t d) const;

  Complex value(Complex z) const;
  Complex value_at_angle(double theta) const;
  /// f(omega_n^k), with the exponent reduced modulo n before the
  /// trigonometric call.
  Complex value_at_root_of_unity(std::int64_t k, std::int64_t n) const;
  /// Re f(e^{i theta}) and its theta-derivative.
  double re_at_angle(double theta) const;
  double re_derivative_at_angle(double theta) const;

  double norm_squared() const;
  /// sum |c_d|, an upper bound for |f| on the unit circle.
  double abs_sum() const;
  bool is_zero() const;
  bool is_normalized(double tol = 1e-12) const;

  TrigPoly scaled(Complex factor) const;
  /// z -> f(w z).
  TrigPoly rotated(Complex w) const;

 private:
  DifferenceSet support_;
  std::vector<Complex> coeffs_;
};

/// f(z_1..z_m) = sum_{d in D} c_d z^d with c_{-d} = conj(c_d), so f is
/// real on the torus.
class MultiTrigPoly {
 public:
  /// Throws InvalidInput if c_{-d} != conj(c_d) (relative tolerance
  /// 1e-12) or every coefficient is zero.
  MultiTrigPoly(VectorDifferenceSet support, std::vector<Complex> coeffs);

  const VectorDifferenceSet& support() const { return support_; }
  const std::vector<Complex>& coeffs() const { return coeffs_; }
  std::size_t dim() const { return support_.dim(); }

  /// Complex value at the point with the given angles. The imaginary part
  /// is rounding noise for a valid instance.
  Complex value_at_angles(std::span<const double> theta) const;
  /// f(omega_n^{j_1}, ..., omega_n^{j_m}).
  Complex value_at_root_index(std::span<const std::int64_t> j, std::int64_t n) const;

  double norm_squared() const;
  double abs_sum() const;
  MultiTrigPoly scaled(double factor) const;

 private:
  VectorDifferenceSet support_;
  std::vector<Complex> coeffs_;
};

/// Finitely supported Laurent polynomial with complex coefficients. Exact
/// zero coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(const std::map<std::int64_t, Complex>& terms);
  static LaurentPoly constant(Complex c);
  static LaurentPoly monomial(Complex c, std::int64_t exponent);

  const std::map<std::int64_t, Complex>& terms() const { return terms_; }
  Complex coeff(std::int64_t k) const;
  bool is_zero() const { return terms_.empty(); }
  std::int64_t min_exponent() const;
  std::int64_t max_exponent() const;
  double abs_sum() const;

  Complex operator()(Complex z) const;
  Complex at_root_of_unity(std::int64_t k, std::int64_t n) const;

  /// sum conj(c_k) z^{-k}; on |z| = 1 this is the complex conjugate.
  LaurentPoly conjugate() const;
  /// Drops coefficients with |c| <= tol.
  LaurentPoly trimmed(double tol) const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(Complex s, const LaurentPoly& a);

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  void add_term(std::int64_t k, Complex c);
  std::map<std::int64_t, Complex> terms_;
};

/// m x m matrix of Laurent polynomials, row-major. Self-conjugacy is a
/// property that operations check, not a constructor invariant.
class LaurentMatrix {
 public:
  LaurentMatrix(std::size_t m, std::vector<LaurentPoly> entries);

  std::size_t m() const { return m_; }
  const LaurentPoly& at(std::size_t i, std::size_t j) const { return entries_[i * m_ + j]; }

  /// f_ji == conjugate(f_ij) up to tol relative to the largest coefficient.
  bool is_self_conjugate(double tol = 1e-12) const;
  /// Every exponent of f_ij lies in D_ij.
  bool majorized_by(const DifferenceMatrix& diffs) const;
  std::int64_t max_abs_exponent() const;
  /// max_i sum_j sum_k |c^{ij}_k|, a bound on the spectral radius of F(z).
  double row_bound() const;

  /// Row-major m x m evaluation F(z).
  std::vector<Complex> evaluate(Complex z) const;
  std::vector<Complex> evaluate_at_root(std::int64_t k, std::int64_t n) const;

 private:
  std::size_t m_;
  std::vector<LaurentPoly> entries_;
};

struct Segment {
  Rational lo;
  Rational hi;
};

using SegmentList = std::vector<Segment>;

}  // namespace signbound
