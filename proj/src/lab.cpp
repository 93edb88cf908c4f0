#include "signbound/lab.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>
#include <thread>

#include "signbound/closed_forms.hpp"
#include "signbound/error.hpp"
#include "signbound/graphs.hpp"
#include "signbound/measure.hpp"
#include "signbound/spectra.hpp"

namespace signbound {

namespace {

const char* const kClaimTags[] = {"connect",  "spectrum",      "two-cosine",
                                  "m-connect", "block-connect", "alpha-sgn"};

Complex gaussian_complex(std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  double re = normal(rng);
  double im = normal(rng);
  return {re, im};
}

double gaussian_real(std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  return normal(rng);
}

std::int64_t pick_n_max(const LabConfig& config, std::int64_t fallback) {
  return config.n_max > 0 ? config.n_max : fallback;
}

TrialRecord make_record(std::int64_t index, const RhoEstimate& est, double bound) {
  TrialRecord r;
  r.index = index;
  r.rho_plus = est.rho_plus;
  r.rho_minus = est.rho_minus;
  r.unresolved = est.unresolved;
  r.margin = est.min_rho() + est.unresolved - bound;
  r.tolerance = defaults::kToleranceFactor * est.resolution_error + defaults::kMarginFloor;
  r.violated = r.margin < -r.tolerance;
  return r;
}

void summarize(VerificationReport& report) {
  report.trials = static_cast<std::int64_t>(report.details.size());
  report.violations = 0;
  report.worst_margin = std::numeric_limits<double>::infinity();
  for (const auto& r : report.details) {
    if (r.violated) ++report.violations;
    report.worst_margin = std::min(report.worst_margin, r.margin);
  }
  if (report.details.empty()) report.worst_margin = 0.0;
}

void require_trials(std::int64_t trials) {
  if (trials < 1) throw InvalidInput("trials must be >= 1");
}

std::string describe(const DifferenceSet& diffs) {
  std::ostringstream out;
  out << "D={";
  for (std::size_t i = 0; i < diffs.size(); ++i) out << (i ? "," : "") << diffs.jumps()[i];
  out << "}";
  return out.str();
}

}  // namespace

std::string to_string(ClaimKind claim) { return kClaimTags[static_cast<int>(claim)]; }

ClaimKind parse_claim(const std::string& tag) {
  for (int i = 0; i < 6; ++i) {
    if (tag == kClaimTags[i]) return static_cast<ClaimKind>(i);
  }
  throw InvalidInput("unknown claim '" + tag + "'");
}

std::mt19937_64 sub_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

void parallel_for(std::int64_t count, unsigned threads,
                  const std::function<void(std::int64_t)>& body) {
  if (count <= 0) return;
  const auto workers = static_cast<std::int64_t>(std::max(1U, threads));
  if (workers == 1) {
    for (std::int64_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::int64_t> next{0};
  std::mutex error_mutex;
  std::int64_t error_index = count;
  std::exception_ptr error;
  auto work = [&] {
    for (std::int64_t i = next++; i < count; i = next++) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (i < error_index) {
          error_index = i;
          error = std::current_exception();
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::int64_t t = 0; t < std::min(workers, count); ++t) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

TrigPoly random_sphere_point(const DifferenceSet& diffs, std::mt19937_64& rng) {
  for (;;) {
    std::vector<Complex> c(diffs.size());
    for (auto& x : c) x = gaussian_complex(rng);
    TrigPoly f(diffs, std::move(c));
    if (f.norm_squared() > 0.0) return normalize(f);
  }
}

DifferenceMatrix random_difference_matrix(std::size_t m, std::int64_t radius, std::mt19937_64& rng) {
  if (m < 1 || radius < 1) throw InvalidInput("random_difference_matrix needs m >= 1 and radius >= 1");
  std::bernoulli_distribution coin(0.5);
  for (;;) {
    std::vector<DifferenceMatrix::Entry> entries(m * m);
    bool any = false;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::int64_t d = 1; d <= radius; ++d) {
        if (coin(rng)) {
          entries[i * m + i].insert(d);
          entries[i * m + i].insert(-d);
          any = true;
        }
      }
      for (std::size_t j = i + 1; j < m; ++j) {
        for (std::int64_t d = -radius; d <= radius; ++d) {
          if (coin(rng)) {
            entries[i * m + j].insert(d);
            entries[j * m + i].insert(-d);
            any = true;
          }
        }
      }
    }
    if (any) return DifferenceMatrix(m, std::move(entries));
  }
}

LaurentMatrix random_majorized_matrix(const DifferenceMatrix& diffs, std::mt19937_64& rng) {
  const std::size_t m = diffs.m();
  std::vector<LaurentPoly> entries(m * m);
  double norm = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::int64_t d : diffs.at(i, i)) {
      if (d < 0) continue;
      if (d == 0) {
        double a = gaussian_real(rng);
        entries[i * m + i] += LaurentPoly::constant(a);
        norm += a * a;
        continue;
      }
      Complex c = gaussian_complex(rng);
      entries[i * m + i] += LaurentPoly::monomial(c, d) + LaurentPoly::monomial(std::conj(c), -d);
      norm += 2.0 * std::norm(c);
    }
    for (std::size_t j = i + 1; j < m; ++j) {
      for (std::int64_t d : diffs.at(i, j)) {
        Complex c = gaussian_complex(rng);
        entries[i * m + j] += LaurentPoly::monomial(c, d);
        entries[j * m + i] += LaurentPoly::monomial(std::conj(c), -d);
        norm += 2.0 * std::norm(c);
      }
    }
  }
  if (norm > 0.0) {
    const double s = 1.0 / std::sqrt(norm);
    for (auto& e : entries) e = Complex(s, 0.0) * e;
  }
  return LaurentMatrix(m, std::move(entries));
}

MultiTrigPoly random_symmetric_poly(const VectorDifferenceSet& diffs, std::mt19937_64& rng) {
  const auto& vecs = diffs.vectors();
  std::vector<Complex> c(vecs.size());
  std::vector<bool> done(vecs.size(), false);
  for (std::size_t i = 0; i < vecs.size(); ++i) {
    if (done[i]) continue;
    IntVector neg = vecs[i];
    for (auto& x : neg) x = -x;
    std::size_t j = diffs.index_of(neg);
    c[i] = gaussian_complex(rng);
    c[j] = std::conj(c[i]);
    done[i] = done[j] = true;
  }
  MultiTrigPoly f(diffs, std::move(c));
  return f.scaled(1.0 / std::sqrt(f.norm_squared()));
}

VerificationReport verify_connect(const DifferenceSet& diffs, std::int64_t trials,
                                  std::uint64_t seed, const LabConfig& config) {
  require_trials(trials);
  VerificationReport report;
  report.claim = ClaimKind::Connect;
  report.seed = seed;
  report.bound =
      alpha_lower_bound(diffs, pick_n_max(config, defaults::kNMax1d), config.node_budget).value;
  const double bound = report.bound.to_double();
  report.details.resize(static_cast<std::size_t>(trials));
  parallel_for(trials, config.threads, [&](std::int64_t i) {
    auto rng = sub_rng(seed, static_cast<std::uint64_t>(i));
    TrigPoly f = random_sphere_point(diffs, rng);
    RhoEstimate est = rho_arcs_1d(f, config.refine_tol).estimate;
    report.details[static_cast<std::size_t>(i)] = make_record(i, est, bound);
  });
  summarize(report);
  return report;
}

VerificationReport verify_spectrum_theorem(const SegmentList& segments,
                                           const std::vector<Rational>& theta,
                                           std::int64_t trials, std::uint64_t seed,
                                           const LabConfig& config) {
  require_trials(trials);
  if (theta.empty()) throw InvalidInput("theta must be non-empty");
  const SegmentsBound sb = segments_product_bound(segments);
  BigInt lcm = 1;
  for (const auto& t : theta) {
    if (t <= Rational(0)) throw InvalidInput("theta must be positive");
    bool inside = std::any_of(segments.begin(), segments.end(),
                              [&](const Segment& s) { return s.lo <= t && t <= s.hi; });
    if (!inside) throw InvalidInput("theta " + t.str() + " lies outside every segment");
    lcm = boost::multiprecision::lcm(lcm, t.den());
  }
  std::vector<std::int64_t> jumps;
  for (const auto& t : theta) {
    BigInt scaled = t.num() * (lcm / t.den());
    if (scaled > BigInt(std::numeric_limits<std::int32_t>::max())) {
      throw InvalidInput("dilated theta is too large");
    }
    jumps.push_back(static_cast<std::int64_t>(scaled));
  }
  const DifferenceSet support(jumps);

  VerificationReport report;
  report.claim = ClaimKind::Spectrum;
  report.seed = seed;
  report.bound = sb.value;
  const double bound = report.bound.to_double();
  report.details.resize(static_cast<std::size_t>(trials));
  parallel_for(trials, config.threads, [&](std::int64_t i) {
    auto rng = sub_rng(seed, static_cast<std::uint64_t>(i));
    std::vector<Complex> c(support.size());
    do {
      for (auto& x : c) {
        double a = gaussian_real(rng);
        double b = gaussian_real(rng);
        x = Complex(a, -b);
      }
    } while (std::all_of(c.begin(), c.end(), [](Complex x) { return x == Complex{}; }));
    TrigPoly f = normalize(TrigPoly(support, c));
    RhoEstimate est = rho_arcs_1d(f, config.refine_tol).estimate;
    report.details[static_cast<std::size_t>(i)] = make_record(i, est, bound);
  });
  summarize(report);
  return report;
}

VerificationReport verify_two_cosine(std::int64_t p, std::int64_t q, std::int64_t trials,
                                     std::uint64_t seed, const LabConfig& config) {
  require_trials(trials);
  VerificationReport report;
  report.claim = ClaimKind::TwoCosine;
  report.seed = seed;
  report.bound = two_cosine_bound(p, q);
  const double bound = report.bound.to_double();
  report.details.resize(static_cast<std::size_t>(trials));
  parallel_for(trials, config.threads, [&](std::int64_t i) {
    auto rng = sub_rng(seed, static_cast<std::uint64_t>(i));
    double a = 0.0;
    double b = 0.0;
    while (a == 0.0 || b == 0.0) {
      a = gaussian_real(rng);
      b = gaussian_real(rng);
    }
    TrigPoly f = normalize(TrigPoly::from_terms({{p, Complex(a, 0.0)}, {q, Complex(b, 0.0)}}));
    RhoEstimate est = rho_arcs_1d(f, config.refine_tol).estimate;
    report.details[static_cast<std::size_t>(i)] = make_record(i, est, bound);
  });
  summarize(report);
  return report;
}

VerificationReport verify_m_connect(const VectorDifferenceSet& diffs, std::int64_t trials,
                                    std::uint64_t seed, const LabConfig& config) {
  require_trials(trials);
  if (config.lattice_exp < 0 || config.lattice_exp * static_cast<std::int64_t>(diffs.dim()) > 24) {
    throw InvalidInput("lattice_exp * m must be at most 24");
  }
  const std::int64_t fallback = diffs.dim() <= 1   ? defaults::kNMax1d
                                : diffs.dim() == 2 ? defaults::kNMax2d
                                                   : defaults::kNMax3d;
  VerificationReport report;
  report.claim = ClaimKind::MConnect;
  report.seed = seed;
  report.bound = alpha_lower_bound(diffs, pick_n_max(config, fallback), config.node_budget).value;
  const double bound = report.bound.to_double();
  report.details.resize(static_cast<std::size_t>(trials));
  parallel_for(trials, config.threads, [&](std::int64_t i) {
    auto rng = sub_rng(seed, static_cast<std::uint64_t>(i));
    MultiTrigPoly f = random_symmetric_poly(diffs, rng);
    RhoEstimate est = rho_lattice_md(f, config.lattice_exp);
    report.details[static_cast<std::size_t>(i)] = make_record(i, est, bound);
  });
  summarize(report);
  return report;
}

VerificationReport verify_block_connect(const DifferenceMatrix& diffs, std::int64_t trials,
                                        std::uint64_t seed, const LabConfig& config) {
  require_trials(trials);
  VerificationReport report;
  report.claim = ClaimKind::BlockConnect;
  report.seed = seed;
  report.bound =
      alpha_lower_bound(diffs, pick_n_max(config, defaults::kNMaxBlock), config.node_budget).value;
  const double bound = report.bound.to_double();
  report.details.resize(static_cast<std::size_t>(trials));
  parallel_for(trials, config.threads, [&](std::int64_t i) {
    auto rng = sub_rng(seed, static_cast<std::uint64_t>(i));
    for (int attempt = 0; attempt < defaults::kDegenerateRetries; ++attempt) {
      LaurentMatrix f = random_majorized_matrix(diffs, rng);
      if (is_degenerate(f)) continue;
      RhoEstimate est = rho_block(f, config.n_samples);
      TrialRecord r = make_record(i, est, bound);
      if (attempt > 0) r.label = "resampled " + std::to_string(attempt);
      report.details[static_cast<std::size_t>(i)] = r;
      return;
    }
    throw DegenerateInput("every draw majorized by the difference matrix was degenerate");
  });
  summarize(report);
  return report;
}

std::optional<bool> signature_vs_alpha(const DifferenceSet& diffs, std::int64_t n,
                                       const TrigPoly& f, double zero_tol,
                                       std::uint64_t node_budget) {
  if (n < 2 * diffs.max_d() + 1) throw InvalidInput("signature_vs_alpha needs n >= 2 max(D) + 1");
  for (std::int64_t d : f.support().jumps()) {
    if (!diffs.contains(d)) throw InvalidInput("f must be supported on D");
  }
  MisResult mis = max_independent_set_exact(CirculantGraph(n, diffs).to_graph(), node_budget);
  if (!mis.exact) return std::nullopt;
  auto eigs = circulant_eigenvalues(f, n);
  Signature sig = signature(eigs, zero_tol < 0.0 ? default_zero_tol(eigs) : zero_tol);
  return mis.size <= std::min(sig.n_plus, sig.n_minus) + sig.n_zero;
}

VerificationReport verify_alpha_sgn(std::int64_t max_jump, std::int64_t n_max,
                                    std::int64_t per_case, std::uint64_t seed,
                                    const LabConfig& config, double zero_tol) {
  if (max_jump < 1 || max_jump > 16) throw InvalidInput("max_jump must lie in [1, 16]");
  if (per_case < 1) throw InvalidInput("per_case must be >= 1");
  if (n_max < 3) throw InvalidInput("n_max must be >= 3");

  struct Case {
    DifferenceSet diffs;
    std::int64_t n;
  };
  std::vector<Case> cases;
  for (std::uint32_t mask = 1; mask < (1U << max_jump); ++mask) {
    std::vector<std::int64_t> jumps;
    for (std::int64_t d = 1; d <= max_jump; ++d) {
      if (mask & (1U << (d - 1))) jumps.push_back(d);
    }
    DifferenceSet diffs(jumps);
    for (std::int64_t n = 2 * diffs.max_d() + 1; n <= n_max; ++n) cases.push_back({diffs, n});
  }

  VerificationReport report;
  report.claim = ClaimKind::AlphaSgn;
  report.seed = seed;
  report.bound = Rational(0);
  const auto count = static_cast<std::int64_t>(cases.size());
  std::vector<std::vector<TrialRecord>> per_case_records(cases.size());
  std::vector<std::int64_t> undecided(cases.size(), 0);
  parallel_for(count, config.threads, [&](std::int64_t c) {
    const Case& cs = cases[static_cast<std::size_t>(c)];
    MisResult mis =
        max_independent_set_exact(CirculantGraph(cs.n, cs.diffs).to_graph(), config.node_budget);
    if (!mis.exact) {
      undecided[static_cast<std::size_t>(c)] = per_case;
      return;
    }
    const auto dn = static_cast<double>(cs.n);
    for (std::int64_t t = 0; t < per_case; ++t) {
      const std::int64_t index = c * per_case + t;
      auto rng = sub_rng(seed, static_cast<std::uint64_t>(index));
      TrigPoly f = random_sphere_point(cs.diffs, rng);
      auto eigs = circulant_eigenvalues(f, cs.n);
      Signature sig = signature(eigs, zero_tol < 0.0 ? default_zero_tol(eigs) : zero_tol);
      TrialRecord r;
      r.index = index;
      r.label = describe(cs.diffs) + " n=" + std::to_string(cs.n);
      r.rho_plus = static_cast<double>(sig.n_plus) / dn;
      r.rho_minus = static_cast<double>(sig.n_minus) / dn;
      r.unresolved = static_cast<double>(sig.n_zero) / dn;
      r.margin = (static_cast<double>(std::min(sig.n_plus, sig.n_minus) + sig.n_zero) -
                  static_cast<double>(mis.size)) /
                 dn;
      r.tolerance = 0.0;
      r.violated = mis.size > std::min(sig.n_plus, sig.n_minus) + sig.n_zero;
      per_case_records[static_cast<std::size_t>(c)].push_back(r);
    }
  });
  for (std::size_t c = 0; c < cases.size(); ++c) {
    for (auto& r : per_case_records[c]) report.details.push_back(std::move(r));
    report.indeterminate += undecided[c];
  }
  summarize(report);
  return report;
}

SearchResult search_min_rho(const DifferenceSet& diffs, std::int64_t restarts, std::int64_t steps,
                            std::uint64_t seed, const LabConfig& config) {
  if (restarts < 1 || steps < 1) throw InvalidInput("restarts and steps must be >= 1");
  auto objective = [&](const TrigPoly& f) {
    return rho_arcs_1d(f, config.refine_tol).estimate.min_rho();
  };

  std::vector<TrigPoly> best_f(static_cast<std::size_t>(restarts),
                               TrigPoly(diffs, std::vector<Complex>(diffs.size())));
  std::vector<double> best_value(static_cast<std::size_t>(restarts), 1.0);
  parallel_for(restarts, config.threads, [&](std::int64_t r) {
    auto rng = sub_rng(seed, static_cast<std::uint64_t>(r));
    TrigPoly current = random_sphere_point(diffs, rng);
    double value = objective(current);
    double step = defaults::kStepStart;
    int stale = 0;
    std::uniform_int_distribution<std::size_t> pick(0, diffs.size() - 1);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    for (std::int64_t s = 0; s < steps; ++s) {
      std::vector<Complex> c = current.coeffs();
      c[pick(rng)] += std::polar(step, angle(rng));
      TrigPoly trial(diffs, std::move(c));
      if (trial.norm_squared() == 0.0) continue;
      trial = normalize(trial);
      double v = objective(trial);
      if (v < value) {
        value = v;
        current = std::move(trial);
        stale = 0;
      } else if (++stale >= defaults::kStepPatience) {
        step = std::max(step * defaults::kStepDecay, defaults::kStepFloor);
        stale = 0;
      }
    }
    best_f[static_cast<std::size_t>(r)] = current;
    best_value[static_cast<std::size_t>(r)] = value;
  });

  SearchResult result;
  result.restarts = restarts;
  result.steps = steps;
  result.seed = seed;
  result.per_restart = best_value;
  auto best = std::min_element(best_value.begin(), best_value.end()) - best_value.begin();
  result.best_f = best_f[static_cast<std::size_t>(best)];
  result.best_min_rho = best_value[static_cast<std::size_t>(best)];
  result.alpha_lower =
      alpha_lower_bound(diffs, pick_n_max(config, defaults::kNMax1d), config.node_budget).value;
  result.gap = result.best_min_rho - result.alpha_lower.to_double();
  return result;
}

}  // namespace signbound
