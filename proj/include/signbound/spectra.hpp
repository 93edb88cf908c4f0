#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "signbound/domain.hpp"

namespace signbound {

/// Dense square complex matrix with entry(i,j) = conj(entry(j,i)).
class HermitianMatrix {
 public:
  /// entries is row-major dim x dim. Throws InvalidInput when the matrix is
  /// not hermitian within tol * max(1, max |entry|).
  HermitianMatrix(std::size_t dim, std::vector<Complex> entries, double tol = 1e-12);

  std::size_t dim() const { return dim_; }
  Complex operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
  const std::vector<Complex>& entries() const { return entries_; }

 private:
  std::size_t dim_;
  std::vector<Complex> entries_;
};

struct Signature {
  std::size_t n_plus = 0;
  std::size_t n_minus = 0;
  std::size_t n_zero = 0;
  double zero_tol = 0.0;

  std::size_t dim() const { return n_plus + n_minus + n_zero; }
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// [2 Re f(omega_n^j)] for j = 0..n-1.
std::vector<double> circulant_eigenvalues(const TrigPoly& f, std::int64_t n);

/// f at every tuple of n-th roots of unity, tuples ordered with the first
/// coordinate most significant. Throws InvalidInput if an imaginary residue
/// exceeds 1e-10 * sum |c_d|.
std::vector<double> m_circulant_eigenvalues(const MultiTrigPoly& f, std::int64_t n);

/// Ascending eigenvalues of the hermitian matrix F(z). Requires |z| = 1
/// within 1e-12 and F self-conjugate.
std::vector<double> block_spectrum_at(const LaurentMatrix& f, Complex z);

/// Concatenation over k of block_spectrum_at(F, omega_n^k).
std::vector<double> block_circulant_eigenvalues(const LaurentMatrix& f, std::int64_t n);

/// Circulant matrix with first row c_d at column d and conj(c_d) at n - d.
/// Requires n >= 2 max(D) + 1.
HermitianMatrix dense_circulant_matrix(const TrigPoly& f, std::int64_t n);

/// n^m x n^m m-circulant matrix with a_{ij} = sum of c_d over d = j - i
/// (mod n). Indices as in m_circulant_eigenvalues.
HermitianMatrix dense_m_circulant_matrix(const MultiTrigPoly& f, std::int64_t n);

/// nm x nm matrix whose (i, j) block is the circulant realizing f_ij.
/// Requires n >= 2 max|exponent| + 1 and F self-conjugate.
HermitianMatrix dense_block_matrix(const LaurentMatrix& f, std::int64_t n);

/// All eigenvalues, ascending, by cyclic complex Jacobi rotations.
std::vector<double> hermitian_eigenvalues(const HermitianMatrix& a);

/// Sign counts; |lambda| <= zero_tol counts as zero. zero_tol must be > 0.
Signature signature(std::span<const double> eigenvalues, double zero_tol);

/// 1e-9 relative to the spectral radius (1e-9 absolute for an all-zero
/// list).
double default_zero_tol(std::span<const double> eigenvalues);

}  // namespace signbound
