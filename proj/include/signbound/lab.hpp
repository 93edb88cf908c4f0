#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "signbound/defaults.hpp"
#include "signbound/domain.hpp"
#include "signbound/rational.hpp"

namespace signbound {

enum class ClaimKind { Connect, Spectrum, TwoCosine, MConnect, BlockConnect, AlphaSgn };

/// "connect", "spectrum", "two-cosine", "m-connect", "block-connect",
/// "alpha-sgn".
std::string to_string(ClaimKind claim);
/// Throws InvalidInput for an unknown tag.
ClaimKind parse_claim(const std::string& tag);

struct TrialRecord {
  std::int64_t index = 0;
  std::string label;
  double rho_plus = 0.0;
  double rho_minus = 0.0;
  double unresolved = 0.0;
  /// min(rho+, rho-) + unresolved - bound
  double margin = 0.0;
  double tolerance = 0.0;
  bool violated = false;
};

struct VerificationReport {
  ClaimKind claim = ClaimKind::Connect;
  std::int64_t trials = 0;
  std::int64_t violations = 0;
  /// Checks that could not be decided (solver budget exhausted).
  std::int64_t indeterminate = 0;
  double worst_margin = 0.0;
  std::uint64_t seed = 0;
  /// The quantity every trial is compared against.
  Rational bound;
  std::vector<TrialRecord> details;
};

struct SearchResult {
  TrigPoly best_f{DifferenceSet({1}), {Complex{1.0, 0.0}}};
  double best_min_rho = 1.0;
  Rational alpha_lower;
  double gap = 0.0;
  std::int64_t restarts = 0;
  std::int64_t steps = 0;
  std::uint64_t seed = 0;
  std::vector<double> per_restart;
};

struct LabConfig {
  /// 0 selects the per-family default from defaults.hpp.
  std::int64_t n_max = 0;
  std::uint64_t node_budget = defaults::kNodeBudget;
  double refine_tol = defaults::kRefineTol;
  std::int64_t lattice_exp = defaults::kLatticeExp;
  std::int64_t n_samples = defaults::kBlockSamples;
  unsigned threads = defaults::kThreads;
};

/// Generator for unit `index` of a run seeded with `seed`; independent of
/// how units are scheduled.
std::mt19937_64 sub_rng(std::uint64_t seed, std::uint64_t index);

/// Calls body(i) for i in [0, count) on up to `threads` workers. The first
/// exception by index is rethrown after all workers finish.
void parallel_for(std::int64_t count, unsigned threads,
                  const std::function<void(std::int64_t)>& body);

/// Uniform point on the coefficient sphere of D.
TrigPoly random_sphere_point(const DifferenceSet& diffs, std::mt19937_64& rng);

/// Random D_ij subsets of [-radius, radius] (diagonal entries symmetric and
/// without 0); never all empty.
DifferenceMatrix random_difference_matrix(std::size_t m, std::int64_t radius, std::mt19937_64& rng);

/// Random self-conjugate F majorized by D with unit coefficient norm.
LaurentMatrix random_majorized_matrix(const DifferenceMatrix& diffs, std::mt19937_64& rng);

/// Random symmetric coefficients (c_{-d} = conj c_d) with unit norm.
MultiTrigPoly random_symmetric_poly(const VectorDifferenceSet& diffs, std::mt19937_64& rng);

VerificationReport verify_connect(const DifferenceSet& diffs, std::int64_t trials,
                                  std::uint64_t seed, const LabConfig& config = {});

/// Throws InvalidInput when some theta is non-positive or outside every
/// segment.
VerificationReport verify_spectrum_theorem(const SegmentList& segments,
                                           const std::vector<Rational>& theta,
                                           std::int64_t trials, std::uint64_t seed,
                                           const LabConfig& config = {});

VerificationReport verify_two_cosine(std::int64_t p, std::int64_t q, std::int64_t trials,
                                     std::uint64_t seed, const LabConfig& config = {});

VerificationReport verify_m_connect(const VectorDifferenceSet& diffs, std::int64_t trials,
                                    std::uint64_t seed, const LabConfig& config = {});

/// Throws DegenerateInput when a trial draws a degenerate F on every retry.
VerificationReport verify_block_connect(const DifferenceMatrix& diffs, std::int64_t trials,
                                        std::uint64_t seed, const LabConfig& config = {});

/// alpha(G_n) <= min(n+, n-) + n0 for the spectrum of f on G_n. Empty when
/// the exact solver runs out of budget. A negative zero_tol selects
/// default_zero_tol.
std::optional<bool> signature_vs_alpha(const DifferenceSet& diffs, std::int64_t n,
                                       const TrigPoly& f, double zero_tol = -1.0,
                                       std::uint64_t node_budget = defaults::kNodeBudget);

/// Checks signature_vs_alpha for every non-empty D inside {1..max_jump},
/// every n in [2 max(D) + 1, n_max] and per_case random f supported on D.
VerificationReport verify_alpha_sgn(std::int64_t max_jump, std::int64_t n_max,
                                    std::int64_t per_case, std::uint64_t seed,
                                    const LabConfig& config = {}, double zero_tol = 1e-9);

SearchResult search_min_rho(const DifferenceSet& diffs, std::int64_t restarts, std::int64_t steps,
                            std::uint64_t seed, const LabConfig& config = {});

}  // namespace signbound
