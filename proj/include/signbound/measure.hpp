#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "signbound/domain.hpp"

namespace signbound {

enum class RhoMethod { RootsOfUnity, Arcs, Lattice, BlockSample };

/// "roots-of-unity", "arcs", "lattice", "block-sample".
std::string to_string(RhoMethod method);

/// Measures of the positive and negative sets plus the mass whose sign the
/// estimator could not decide. The three masses sum to 1.
struct RhoEstimate {
  double rho_plus = 0.0;
  double rho_minus = 0.0;
  double unresolved = 0.0;
  RhoMethod method = RhoMethod::Arcs;
  std::int64_t resolution = 0;
  /// Estimated discretization error of rho_plus and rho_minus beyond the
  /// unresolved mass (0 for the arc method, where unresolved already
  /// brackets every located zero).
  double resolution_error = 0.0;

  double min_rho() const { return rho_plus < rho_minus ? rho_plus : rho_minus; }
};

struct Arc {
  double start = 0.0;  // in [0, 2 pi)
  double end = 0.0;    // > start; exceeds 2 pi for the arc that wraps
  int sign = 0;
};

struct ArcDecomposition {
  std::vector<double> zeros;  // ascending in [0, 2 pi)
  std::vector<Arc> arcs;
  /// Sample cells whose small magnitude triggered an 8x sub-sampling pass.
  std::size_t flagged_cells = 0;
  /// Normalized length of flagged cells where no zero was found; an upper
  /// bound on the mass a missed zero pair could occupy.
  double missed_pair_risk = 0.0;
};

struct ArcResult {
  RhoEstimate estimate;
  ArcDecomposition arcs;
};

/// Sign counts of Re f at the n-th roots of unity. Values with
/// |Re f| <= 1e-12 sum |c_d| are unresolved.
RhoEstimate rho_roots_of_unity(const TrigPoly& f, std::int64_t n);

/// Locates every zero of Re f(e^{i theta}) on a grid of
/// max(16 max(D), min_samples) cells, brackets each to width refine_tol
/// and sums the signed arcs. Throws DegenerateInput when all samples are
/// numerically zero.
ArcResult rho_arcs_1d(const TrigPoly& f, double refine_tol = 1e-10, std::int64_t min_samples = 0);

/// Sign counts of f on the 2^{nm} points of the dyadic lattice with
/// n = lattice_exp. Requires lattice_exp * m <= 24.
RhoEstimate rho_lattice_md(const MultiTrigPoly& f, std::int64_t lattice_exp);

/// Average over z = omega_{n_samples}^k of the fractions of positive and
/// negative eigenvalues of F(z). Throws InvalidInput for a non
/// self-conjugate or degenerate F.
RhoEstimate rho_block(const LaurentMatrix& f, std::int64_t n_samples);

/// Exact Laurent determinant by expansion over column subsets (m <= 8).
LaurentPoly det_laurent(const LaurentMatrix& f);

/// det F vanishes identically, judged with coefficients below
/// 1e-10 * prod_i (row sum of |coefficients|).
bool is_degenerate(const LaurentMatrix& f);

/// Estimates for the partial sums f_k = sum_{j<=k} a_j z^j, k = 1..N.
/// Partial sums that are identically zero yield unresolved = 1.
std::vector<RhoEstimate> rho_partial_sums(std::span<const Complex> coeffs, std::int64_t n_grid,
                                          double refine_tol = 1e-10);

}  // namespace signbound
