#pragma once

#include <cstdint>

#include "signbound/domain.hpp"
#include "signbound/rational.hpp"

namespace signbound {

/// a/(a+b), a lower bound on alpha({a, ..., b}) witnessed by {0, ..., a-1}
/// in G_{a+b}. Requires 1 <= a <= b.
Rational consecutive_bound(std::int64_t a, std::int64_t b);

/// Exact alpha({a, b}) = floor((a+b)/2)/(a+b) for coprime a != b.
Rational pair_alpha(std::int64_t a, std::int64_t b);

/// alpha1 * alpha2, a lower bound on alpha(D1 u D2). Both in [0, 1].
Rational union_bound(const Rational& alpha1, const Rational& alpha2);

struct SegmentsBound {
  /// prod 1/(1 + b_i/a_i)
  Rational value;
  /// prod 1/(1 + floor(b_i)/ceil(a_i)); a segment holding no integer
  /// contributes a factor of 1.
  Rational rounded;
};

/// Lower bound on min(rho+, rho-) for spectra inside a union of segments.
SegmentsBound segments_product_bound(const SegmentList& segments);

/// 1/2 - 1/(2(p+q)) for coprime p, q with p + q odd.
Rational two_cosine_bound(std::int64_t p, std::int64_t q);

/// Rescales f by a positive real so that sum |c_d|^2 = 1.
TrigPoly normalize(const TrigPoly& f);

LaurentPoly laurent_conjugate(const LaurentPoly& f);

}  // namespace signbound
