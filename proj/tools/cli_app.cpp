#include "cli_app.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "signbound/defaults.hpp"
#include "signbound/error.hpp"
#include "signbound/json_io.hpp"
#include "signbound/lab.hpp"
#include "signbound/measure.hpp"

namespace signbound::cli {

namespace {

struct RunConfig {
  std::string input_path;
  std::string inline_json;
  std::uint64_t seed = defaults::kSeed;
  std::int64_t n_max = 0;
  std::uint64_t node_budget = defaults::kNodeBudget;
  std::int64_t trials = defaults::kTrials;
  std::int64_t restarts = defaults::kRestarts;
  std::int64_t steps = defaults::kSteps;
  std::int64_t lattice_exp = defaults::kLatticeExp;
  std::int64_t n_samples = defaults::kBlockSamples;
  double refine_tol = defaults::kRefineTol;
  unsigned threads = defaults::kThreads;
  std::string format = "json";
  std::string output_path;
  std::string claim;

  LabConfig lab() const {
    LabConfig c;
    c.n_max = n_max;
    c.node_budget = node_budget;
    c.refine_tol = refine_tol;
    c.lattice_exp = lattice_exp;
    c.n_samples = n_samples;
    c.threads = threads;
    return c;
  }
};

struct Output {
  Json json;
  std::string csv;
  int code = kOk;
};

Json load_input(const RunConfig& cfg) {
  if (!cfg.inline_json.empty() && !cfg.input_path.empty()) {
    throw InvalidInput("give either --input or --json, not both");
  }
  std::string text = cfg.inline_json;
  if (!cfg.input_path.empty()) {
    std::ifstream in(cfg.input_path);
    if (!in) throw InvalidInput("cannot read " + cfg.input_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  if (text.empty()) throw InvalidInput("no input: pass --input PATH or --json TEXT");
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("input is not valid JSON: ") + e.what());
  }
}

std::string csv_cell(const Json& j) { return j.dump(); }

template <typename Row>
std::string csv_table(const std::vector<std::string>& columns, const std::vector<Row>& rows) {
  std::ostringstream out;
  for (std::size_t c = 0; c < columns.size(); ++c) out << (c ? "," : "") << columns[c];
  out << "\n";
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < columns.size(); ++c) out << (c ? "," : "") << csv_cell(row.at(columns[c]));
    out << "\n";
  }
  return out.str();
}

std::int64_t family_n_max(const RunConfig& cfg, const AnyDifferences& d) {
  if (cfg.n_max > 0) return cfg.n_max;
  if (std::holds_alternative<DifferenceSet>(d)) return defaults::kNMax1d;
  if (const auto* v = std::get_if<VectorDifferenceSet>(&d)) {
    return v->dim() <= 1 ? defaults::kNMax1d : v->dim() == 2 ? defaults::kNMax2d : defaults::kNMax3d;
  }
  return defaults::kNMaxBlock;
}

Output cmd_alpha(const RunConfig& cfg) {
  AnyDifferences d = differences_from_json(load_input(cfg));
  const std::int64_t n_max = family_n_max(cfg, d);
  AlphaEstimate est = std::visit(
      [&](const auto& diffs) { return alpha_lower_bound(diffs, n_max, cfg.node_budget); }, d);
  static const char* const kFamilies[] = {"circulant", "m-circulant", "block-circulant"};
  Output out;
  out.json = Json{{"family", kFamilies[d.index()]}, {"n_max", n_max}};
  out.json.update(to_json(est));
  std::vector<Json> rows(out.json["per_n"].begin(), out.json["per_n"].end());
  for (auto& row : rows) row["value"] = row["value"]["num"].dump() + "/" + row["value"]["den"].dump();
  out.csv = csv_table({"n", "size", "vertex_count", "value", "exact"}, rows);
  return out;
}

Output cmd_rho(const RunConfig& cfg) {
  AnyPolynomial p = polynomial_from_json(load_input(cfg));
  Output out;
  RhoEstimate est;
  if (const auto* f = std::get_if<TrigPoly>(&p)) {
    ArcResult r = rho_arcs_1d(*f, cfg.refine_tol);
    est = r.estimate;
    out.json = Json{{"estimate", to_json(est)}, {"arcs", to_json(r.arcs)}};
  } else if (const auto* mf = std::get_if<MultiTrigPoly>(&p)) {
    est = rho_lattice_md(*mf, cfg.lattice_exp);
    out.json = Json{{"estimate", to_json(est)}};
  } else {
    est = rho_block(std::get<LaurentMatrix>(p), cfg.n_samples);
    out.json = Json{{"estimate", to_json(est)}};
  }
  out.csv = csv_table({"rho_plus", "rho_minus", "unresolved", "min_rho", "method", "resolution",
                       "resolution_error"},
                      std::vector<Json>{to_json(est)});
  return out;
}

std::int64_t param_int(const Json& params, const char* key, std::int64_t fallback) {
  if (!params.is_object() || !params.contains(key)) return fallback;
  if (!params.at(key).is_number_integer()) throw InvalidInput(std::string(key) + " must be an integer");
  return params.at(key).get<std::int64_t>();
}

std::int64_t required_int(const Json& params, const char* key) {
  if (!params.is_object() || !params.contains(key)) {
    throw InvalidInput(std::string("missing parameter '") + key + "'");
  }
  return param_int(params, key, 0);
}

Output cmd_verify(const RunConfig& cfg) {
  if (cfg.claim.empty()) throw InvalidInput("verify needs --claim");
  const ClaimKind claim = parse_claim(cfg.claim);
  const Json params = load_input(cfg);
  const LabConfig lab = cfg.lab();
  VerificationReport report;
  switch (claim) {
    case ClaimKind::Connect:
      report = verify_connect(difference_set_from_json(params), cfg.trials, cfg.seed, lab);
      break;
    case ClaimKind::Spectrum: {
      if (!params.is_object() || !params.contains("segments") || !params.contains("theta")) {
        throw InvalidInput("spectrum needs segments and theta");
      }
      std::vector<Rational> theta;
      if (!params.at("theta").is_array()) throw InvalidInput("theta must be a list");
      for (const auto& t : params.at("theta")) theta.push_back(rational_from_json(t));
      report = verify_spectrum_theorem(segments_from_json(params.at("segments")), theta, cfg.trials,
                                       cfg.seed, lab);
      break;
    }
    case ClaimKind::TwoCosine:
      report = verify_two_cosine(required_int(params, "p"), required_int(params, "q"), cfg.trials,
                                 cfg.seed, lab);
      break;
    case ClaimKind::MConnect:
      report = verify_m_connect(vector_difference_set_from_json(params), cfg.trials, cfg.seed, lab);
      break;
    case ClaimKind::BlockConnect:
      report = verify_block_connect(difference_matrix_from_json(params), cfg.trials, cfg.seed, lab);
      break;
    case ClaimKind::AlphaSgn:
      report = verify_alpha_sgn(param_int(params, "max_jump", 4), param_int(params, "n_max", 20),
                                param_int(params, "per_case", 20), cfg.seed, lab);
      break;
  }
  Output out;
  out.json = to_json(report);
  out.csv = trials_to_csv(report.details);
  out.code = report.violations > 0 ? kViolation : kOk;
  return out;
}

Output cmd_search(const RunConfig& cfg) {
  DifferenceSet d = difference_set_from_json(load_input(cfg));
  SearchResult s = search_min_rho(d, cfg.restarts, cfg.steps, cfg.seed, cfg.lab());
  Output out;
  out.json = to_json(s);
  std::vector<Json> rows;
  for (std::size_t i = 0; i < s.per_restart.size(); ++i) {
    rows.push_back(Json{{"restart", i}, {"min_rho", s.per_restart[i]}});
  }
  out.csv = csv_table({"restart", "min_rho"}, rows);
  return out;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--input", cfg.input_path, "JSON input file");
  sub->add_option("--json", cfg.inline_json, "inline JSON input");
  sub->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
  sub->add_option("--n-max", cfg.n_max, "largest n for alpha (0 = family default)")
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--node-budget", cfg.node_budget, "branch and bound node budget")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--trials", cfg.trials, "verification trials")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--restarts", cfg.restarts, "search restarts")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--steps", cfg.steps, "search steps per restart")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--lattice-exp", cfg.lattice_exp, "dyadic lattice exponent")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--n-samples", cfg.n_samples, "block spectrum samples")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--refine-tol", cfg.refine_tol, "zero bracket width")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--threads", cfg.threads, "worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--format", cfg.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  sub->add_option("--output", cfg.output_path, "write the report here instead of stdout");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Independence density and sign measure toolkit", "signbound"};
  app.require_subcommand(1);
  RunConfig cfg;
  CLI::App* alpha = app.add_subcommand("alpha", "alpha lower bound from exact MIS");
  CLI::App* rho = app.add_subcommand("rho", "positive and negative sign measures");
  CLI::App* verify = app.add_subcommand("verify", "randomized verification of a claim");
  CLI::App* search = app.add_subcommand("search", "coefficient search for small min(rho+, rho-)");
  for (CLI::App* sub : {alpha, rho, verify, search}) add_common(sub, cfg);
  verify->add_option("--claim", cfg.claim,
                     "connect | spectrum | two-cosine | m-connect | block-connect | alpha-sgn")
      ->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  Output result;
  try {
    if (*alpha) {
      result = cmd_alpha(cfg);
    } else if (*rho) {
      result = cmd_rho(cfg);
    } else if (*verify) {
      result = cmd_verify(cfg);
    } else {
      result = cmd_search(cfg);
    }
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const DegenerateInput& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const Json::exception& e) {
    err << "error: malformed input: " << e.what() << "\n";
    return kBadInput;
  }

  const std::string text = cfg.format == "csv" ? result.csv : result.json.dump(2) + "\n";
  if (cfg.output_path.empty()) {
    out << text;
  } else {
    std::ofstream file(cfg.output_path);
    if (!file) {
      err << "error: cannot write " << cfg.output_path << "\n";
      return kBadInput;
    }
    file << text;
  }
  return result.code;
}

}  // namespace signbound::cli
