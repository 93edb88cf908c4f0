#include "signbound/json_io.hpp"

#include <limits>
#include <sstream>

#include "signbound/error.hpp"

namespace signbound {

namespace {

[[noreturn]] void bad(const std::string& what) { throw InvalidInput("malformed input: " + what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::int64_t as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

double as_double(const Json& j, const char* what) {
  if (!j.is_number()) bad(std::string(what) + " must be a number");
  return j.get<double>();
}

Json big_to_json(const BigInt& v) {
  if (v >= BigInt(std::numeric_limits<std::int64_t>::min()) &&
      v <= BigInt(std::numeric_limits<std::int64_t>::max())) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

BigInt big_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::exception&) {
      bad("'" + j.get<std::string>() + "' is not an integer");
    }
  }
  bad("expected an integer");
}

std::vector<std::int64_t> int_list(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be a list");
  std::vector<std::int64_t> out;
  for (const auto& x : j) out.push_back(as_int(x, what));
  return out;
}

std::vector<Complex> complex_list(const Json& j) {
  if (!j.is_array()) bad("coeffs must be a list");
  std::vector<Complex> out;
  for (const auto& x : j) out.push_back(complex_from_json(x));
  return out;
}

/// Square list of lists; returns m.
std::size_t matrix_size(const Json& rows) {
  if (!rows.is_array() || rows.empty()) bad("matrix must be a non-empty list of rows");
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != rows.size()) bad("matrix must be square");
  }
  return rows.size();
}

bool has_object_cell(const Json& rows) {
  for (const auto& row : rows) {
    if (!row.is_array()) continue;
    for (const auto& cell : row) {
      if (cell.is_object()) return true;
    }
  }
  return false;
}

}  // namespace

Json to_json(const Rational& r) { return Json{{"num", big_to_json(r.num())}, {"den", big_to_json(r.den())}}; }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_object()) return Rational(big_from_json(field(j, "num")), big_from_json(field(j, "den")));
  bad("expected a rational");
}

Json to_json(Complex c) { return Json::array({c.real(), c.imag()}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2) return {as_double(j[0], "real part"), as_double(j[1], "imaginary part")};
  bad("expected a number or [re, im]");
}

Json to_json(const DifferenceSet& d) { return Json{{"jumps", d.jumps()}}; }

Json to_json(const VectorDifferenceSet& d) { return Json{{"vectors", d.vectors()}}; }

Json to_json(const DifferenceMatrix& d) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < d.m(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < d.m(); ++j) {
      Json cell = Json::array();
      for (std::int64_t e : d.at(i, j)) cell.push_back(e);
      row.push_back(cell);
    }
    rows.push_back(row);
  }
  return Json{{"matrix", rows}};
}

Json to_json(const TrigPoly& f) {
  Json coeffs = Json::array();
  for (Complex c : f.coeffs()) coeffs.push_back(to_json(c));
  return Json{{"jumps", f.support().jumps()}, {"coeffs", coeffs}};
}

Json to_json(const MultiTrigPoly& f) {
  Json coeffs = Json::array();
  for (Complex c : f.coeffs()) coeffs.push_back(to_json(c));
  return Json{{"vectors", f.support().vectors()}, {"coeffs", coeffs}};
}

Json to_json(const LaurentMatrix& f) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < f.m(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < f.m(); ++j) {
      Json cell = Json::object();
      for (const auto& [k, c] : f.at(i, j).terms()) cell[std::to_string(k)] = to_json(c);
      row.push_back(cell);
    }
    rows.push_back(row);
  }
  return Json{{"matrix", rows}};
}

Json to_json(const AlphaEstimate& a) {
  Json per_n = Json::array();
  for (const auto& [n, e] : a.per_n) {
    per_n.push_back(Json{{"n", n},
                         {"size", e.size},
                         {"vertex_count", e.vertex_count},
                         {"value", to_json(e.value)},
                         {"exact", e.exact}});
  }
  return Json{{"value", to_json(a.value)},
              {"value_decimal", a.value.to_double()},
              {"witness_n", a.witness_n},
              {"witness", a.witness},
              {"greedy_only", a.greedy_only},
              {"per_n", per_n}};
}

Json to_json(const RhoEstimate& r) {
  return Json{{"rho_plus", r.rho_plus},
              {"rho_minus", r.rho_minus},
              {"unresolved", r.unresolved},
              {"min_rho", r.min_rho()},
              {"method", to_string(r.method)},
              {"resolution", r.resolution},
              {"resolution_error", r.resolution_error}};
}

Json to_json(const ArcDecomposition& a) {
  Json arcs = Json::array();
  for (const auto& arc : a.arcs) {
    arcs.push_back(Json{{"start", arc.start}, {"end", arc.end}, {"sign", arc.sign}});
  }
  return Json{{"zeros", a.zeros},
              {"arcs", arcs},
              {"flagged_cells", a.flagged_cells},
              {"missed_pair_risk", a.missed_pair_risk}};
}

Json to_json(const TrialRecord& r) {
  return Json{{"index", r.index},         {"label", r.label},   {"rho_plus", r.rho_plus},
              {"rho_minus", r.rho_minus}, {"unresolved", r.unresolved}, {"margin", r.margin},
              {"tolerance", r.tolerance}, {"violated", r.violated}};
}

Json to_json(const VerificationReport& r) {
  Json details = Json::array();
  for (const auto& t : r.details) details.push_back(to_json(t));
  return Json{{"claim", to_string(r.claim)},
              {"trials", r.trials},
              {"violations", r.violations},
              {"indeterminate", r.indeterminate},
              {"worst_margin", r.worst_margin},
              {"seed", r.seed},
              {"bound", to_json(r.bound)},
              {"bound_decimal", r.bound.to_double()},
              {"details", details}};
}

Json to_json(const SearchResult& s) {
  return Json{{"best_f", to_json(s.best_f)},
              {"best_min_rho", s.best_min_rho},
              {"alpha_lower", to_json(s.alpha_lower)},
              {"alpha_lower_decimal", s.alpha_lower.to_double()},
              {"gap", s.gap},
              {"restarts", s.restarts},
              {"steps", s.steps},
              {"seed", s.seed},
              {"per_restart", s.per_restart}};
}

DifferenceSet difference_set_from_json(const Json& j) {
  const Json& list = j.is_array() ? j : field(j, "jumps");
  return DifferenceSet(int_list(list, "jumps"));
}

VectorDifferenceSet vector_difference_set_from_json(const Json& j) {
  const Json& list = j.is_array() ? j : field(j, "vectors");
  if (!list.is_array() || list.empty()) bad("vectors must be a non-empty list");
  std::vector<IntVector> vecs;
  for (const auto& v : list) vecs.push_back(int_list(v, "vector"));
  const std::size_t dim = vecs.front().size();
  return VectorDifferenceSet(dim, std::move(vecs));
}

DifferenceMatrix difference_matrix_from_json(const Json& j) {
  const Json& rows = j.is_array() ? j : field(j, "matrix");
  const std::size_t m = matrix_size(rows);
  std::vector<DifferenceMatrix::Entry> entries;
  for (const auto& row : rows) {
    for (const auto& cell : row) {
      auto v = int_list(cell, "matrix cell");
      entries.emplace_back(v.begin(), v.end());
    }
  }
  return DifferenceMatrix(m, std::move(entries));
}

TrigPoly trig_poly_from_json(const Json& j) {
  return TrigPoly(DifferenceSet(int_list(field(j, "jumps"), "jumps")), complex_list(field(j, "coeffs")));
}

MultiTrigPoly multi_trig_poly_from_json(const Json& j) {
  return MultiTrigPoly(vector_difference_set_from_json(field(j, "vectors")),
                       complex_list(field(j, "coeffs")));
}

LaurentMatrix laurent_matrix_from_json(const Json& j) {
  const Json& rows = field(j, "matrix");
  const std::size_t m = matrix_size(rows);
  std::vector<LaurentPoly> entries;
  for (const auto& row : rows) {
    for (const auto& cell : row) {
      if (cell.is_array() && cell.empty()) {
        entries.emplace_back();
        continue;
      }
      if (!cell.is_object()) bad("Laurent matrix cells must be {\"exponent\": coefficient} objects");
      std::map<std::int64_t, Complex> terms;
      for (const auto& [key, value] : cell.items()) {
        std::size_t used = 0;
        std::int64_t k = 0;
        try {
          k = std::stoll(key, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used == 0 || used != key.size()) bad("exponent '" + key + "' is not an integer");
        terms[k] += complex_from_json(value);
      }
      entries.emplace_back(terms);
    }
  }
  return LaurentMatrix(m, std::move(entries));
}

SegmentList segments_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) bad("segments must be a non-empty list");
  SegmentList out;
  for (const auto& s : j) {
    if (!s.is_array() || s.size() != 2) bad("each segment must be [lo, hi]");
    out.push_back({rational_from_json(s[0]), rational_from_json(s[1])});
  }
  return out;
}

VerificationReport report_from_json(const Json& j) {
  VerificationReport r;
  const Json& claim = field(j, "claim");
  if (!claim.is_string()) bad("claim must be a string");
  r.claim = parse_claim(claim.get<std::string>());
  r.trials = as_int(field(j, "trials"), "trials");
  r.violations = as_int(field(j, "violations"), "violations");
  r.indeterminate = as_int(field(j, "indeterminate"), "indeterminate");
  r.worst_margin = as_double(field(j, "worst_margin"), "worst_margin");
  r.seed = field(j, "seed").get<std::uint64_t>();
  r.bound = rational_from_json(field(j, "bound"));
  for (const auto& t : field(j, "details")) {
    TrialRecord rec;
    rec.index = as_int(field(t, "index"), "index");
    rec.label = field(t, "label").get<std::string>();
    rec.rho_plus = as_double(field(t, "rho_plus"), "rho_plus");
    rec.rho_minus = as_double(field(t, "rho_minus"), "rho_minus");
    rec.unresolved = as_double(field(t, "unresolved"), "unresolved");
    rec.margin = as_double(field(t, "margin"), "margin");
    rec.tolerance = as_double(field(t, "tolerance"), "tolerance");
    rec.violated = field(t, "violated").get<bool>();
    r.details.push_back(rec);
  }
  return r;
}

AnyDifferences differences_from_json(const Json& j) {
  if (!j.is_object()) bad("expected an object with jumps, vectors or matrix");
  if (j.contains("jumps")) return difference_set_from_json(j);
  if (j.contains("vectors")) return vector_difference_set_from_json(j);
  if (j.contains("matrix")) {
    if (has_object_cell(j.at("matrix"))) bad("difference matrix cells must be lists of integers");
    return difference_matrix_from_json(j);
  }
  bad("expected one of jumps, vectors or matrix");
}

AnyPolynomial polynomial_from_json(const Json& j) {
  if (!j.is_object()) bad("expected an object with jumps, vectors or matrix");
  if (j.contains("jumps")) return trig_poly_from_json(j);
  if (j.contains("vectors")) return multi_trig_poly_from_json(j);
  if (j.contains("matrix")) return laurent_matrix_from_json(j);
  bad("expected one of jumps, vectors or matrix");
}

std::string trials_to_csv(const std::vector<TrialRecord>& records) {
  std::ostringstream out;
  for (std::size_t c = 0; c < std::size(kTrialColumns); ++c) out << (c ? "," : "") << kTrialColumns[c];
  out << "\n";
  for (const auto& r : records) {
    Json j = to_json(r);
    for (std::size_t c = 0; c < std::size(kTrialColumns); ++c) {
      out << (c ? "," : "") << j.at(kTrialColumns[c]).dump();
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace signbound
