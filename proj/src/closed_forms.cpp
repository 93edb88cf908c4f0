#include "signbound/closed_forms.hpp"

#include <cmath>
#include <numeric>

#include "signbound/error.hpp"

namespace signbound {

Rational consecutive_bound(std::int64_t a, std::int64_t b) {
  if (a < 1 || a > b) throw InvalidInput("consecutive_bound requires 1 <= a <= b");
  return {a, a + b};
}

Rational pair_alpha(std::int64_t a, std::int64_t b) {
  if (a < 1 || b < 1) throw InvalidInput("pair_alpha requires positive a, b");
  if (a == b) throw InvalidInput("pair_alpha requires a != b");
  if (std::gcd(a, b) != 1) throw InvalidInput("pair_alpha requires coprime a, b");
  return {(a + b) / 2, a + b};
}

Rational union_bound(const Rational& alpha1, const Rational& alpha2) {
  const Rational zero(0);
  const Rational one(1);
  if (alpha1 < zero || alpha1 > one || alpha2 < zero || alpha2 > one) {
    throw InvalidInput("union_bound arguments must lie in [0, 1]");
  }
  return alpha1 * alpha2;
}

SegmentsBound segments_product_bound(const SegmentList& segments) {
  SegmentsBound out{Rational(1), Rational(1)};
  for (const auto& [lo, hi] : segments) {
    if (lo <= Rational(0)) throw InvalidInput("segment start must be positive");
    if (lo > hi) throw InvalidInput("segment start exceeds its end");
    out.value = out.value * (lo / (lo + hi));
    BigInt first = lo.ceil();
    BigInt last = hi.floor();
    if (first <= last) out.rounded = out.rounded * Rational(first, first + last);
  }
  return out;
}

Rational two_cosine_bound(std::int64_t p, std::int64_t q) {
  if (p < 1 || q < 1) throw InvalidInput("two_cosine_bound requires positive p, q");
  if (std::gcd(p, q) != 1) throw InvalidInput("two_cosine_bound requires coprime p, q");
  if ((p + q) % 2 == 0) throw InvalidInput("two_cosine_bound requires p + q odd");
  return Rational(1, 2) - Rational(1, 2 * (p + q));
}

TrigPoly normalize(const TrigPoly& f) {
  double norm2 = f.norm_squared();
  if (norm2 == 0.0) throw InvalidInput("cannot normalize the zero polynomial");
  return f.scaled(1.0 / std::sqrt(norm2));
}

LaurentPoly laurent_conjugate(const LaurentPoly& f) { return f.conjugate(); }

}  // namespace signbound
