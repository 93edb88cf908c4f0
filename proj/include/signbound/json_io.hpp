#pragma once

#include <json.hpp>
#include <string>
#include <variant>

#include "signbound/domain.hpp"
#include "signbound/graphs.hpp"
#include "signbound/lab.hpp"
#include "signbound/measure.hpp"
#include "signbound/rational.hpp"

namespace signbound {

/// Object keys keep insertion order so output is stable and readable.
using Json = nlohmann::ordered_json;

// Rationals are written as {"num": p, "den": q}; integers that do not fit
// in 64 bits become decimal strings. Parsing also accepts a plain integer
// or a "p/q" string.
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

/// Complex numbers are [re, im]; a bare number is read as real.
Json to_json(Complex c);
Complex complex_from_json(const Json& j);

Json to_json(const DifferenceSet& d);
Json to_json(const VectorDifferenceSet& d);
Json to_json(const DifferenceMatrix& d);
Json to_json(const TrigPoly& f);
Json to_json(const MultiTrigPoly& f);
/// {"matrix": [[{"exp": [re, im], ...}, ...], ...]}
Json to_json(const LaurentMatrix& f);

Json to_json(const AlphaEstimate& a);
Json to_json(const RhoEstimate& r);
Json to_json(const ArcDecomposition& a);
Json to_json(const TrialRecord& r);
Json to_json(const VerificationReport& r);
Json to_json(const SearchResult& s);

// Parsers throw InvalidInput on malformed documents.
DifferenceSet difference_set_from_json(const Json& j);
VectorDifferenceSet vector_difference_set_from_json(const Json& j);
DifferenceMatrix difference_matrix_from_json(const Json& j);
TrigPoly trig_poly_from_json(const Json& j);
MultiTrigPoly multi_trig_poly_from_json(const Json& j);
LaurentMatrix laurent_matrix_from_json(const Json& j);
SegmentList segments_from_json(const Json& j);
VerificationReport report_from_json(const Json& j);

using AnyDifferences = std::variant<DifferenceSet, VectorDifferenceSet, DifferenceMatrix>;
using AnyPolynomial = std::variant<TrigPoly, MultiTrigPoly, LaurentMatrix>;

/// Chooses the family from the document shape: "jumps", "vectors" or
/// "matrix" with list cells.
AnyDifferences differences_from_json(const Json& j);
/// "jumps" + "coeffs", "vectors" + "coeffs", or "matrix" with object cells.
AnyPolynomial polynomial_from_json(const Json& j);

/// Column order shared by CSV output and the JSON trial records.
inline constexpr const char* kTrialColumns[] = {"index",      "label",  "rho_plus", "rho_minus",
                                                "unresolved", "margin", "tolerance", "violated"};

/// One CSV header line plus one line per record; each cell is the JSON
/// text of the matching record field.
std::string trials_to_csv(const std::vector<TrialRecord>& records);

}  // namespace signbound
