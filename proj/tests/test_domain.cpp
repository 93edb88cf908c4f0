#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "signbound/closed_forms.hpp"
#include "signbound/domain.hpp"
#include "signbound/error.hpp"
#include "signbound/rational.hpp"

using namespace signbound;

namespace {

Rational q(std::int64_t p, std::int64_t d) { return Rational(BigInt(p), BigInt(d)); }

}  // namespace

TEST(Rational, StoresLowestTermsWithPositiveDenominator) {
  Rational r(BigInt(6), BigInt(-4));
  EXPECT_EQ(r.num(), BigInt(-3));
  EXPECT_EQ(r.den(), BigInt(2));
  EXPECT_EQ(r.str(), "-3/2");
  EXPECT_EQ(Rational(BigInt(4), BigInt(2)).str(), "2");
  EXPECT_THROW(Rational(BigInt(1), BigInt(0)), InvalidInput);
}

TEST(Rational, ArithmeticAndOrderAreExact) {
  EXPECT_EQ(q(1, 3) + q(1, 6), q(1, 2));
  EXPECT_EQ(q(1, 3) - q(1, 2), q(-1, 6));
  EXPECT_EQ(q(2, 3) * q(9, 4), q(3, 2));
  EXPECT_EQ(q(2, 3) / q(4, 9), q(3, 2));
  EXPECT_LT(q(1, 3), q(2, 5));
  EXPECT_GT(q(3, 7), q(2, 5));
  EXPECT_EQ(q(7, 2).floor(), BigInt(3));
  EXPECT_EQ(q(-7, 2).floor(), BigInt(-4));
  EXPECT_EQ(q(7, 2).ceil(), BigInt(4));
}

TEST(Rational, ParsesIntegersAndFractions) {
  EXPECT_EQ(parse_rational("5"), Rational(5));
  EXPECT_EQ(parse_rational("-10/4"), q(-5, 2));
  EXPECT_THROW(parse_rational("1/0"), InvalidInput);
  EXPECT_THROW(parse_rational("x"), InvalidInput);
  EXPECT_THROW(parse_rational(""), InvalidInput);
}

TEST(Rational, HugeValuesStayExact) {
  Rational big(BigInt("123456789012345678901234567890"), BigInt(3));
  EXPECT_EQ(big.num(), BigInt("41152263004115226300411522630"));
  EXPECT_EQ(big * Rational(3), Rational(BigInt("123456789012345678901234567890"), BigInt(1)));
}

TEST(DifferenceSet, SortsAndValidates) {
  DifferenceSet d({3, 1, 3});
  EXPECT_EQ(d.jumps(), (std::vector<std::int64_t>{1, 3}));
  EXPECT_EQ(d.max_d(), 3);
  EXPECT_TRUE(d.contains(1));
  EXPECT_FALSE(d.contains(2));
  EXPECT_THROW(DifferenceSet({}), InvalidInput);
  EXPECT_THROW(DifferenceSet({0, 1}), InvalidInput);
  EXPECT_EQ(d.union_with(DifferenceSet({2})).jumps(), (std::vector<std::int64_t>{1, 2, 3}));
}

TEST(VectorDifferenceSet, RequiresNegationClosure) {
  EXPECT_THROW(VectorDifferenceSet(2, {{1, 0}}), InvalidInput);
  EXPECT_THROW(VectorDifferenceSet(2, {{0, 0}}), InvalidInput);
  EXPECT_THROW(VectorDifferenceSet(2, {{1, 0, 0}, {-1, 0, 0}}), InvalidInput);
  auto d = VectorDifferenceSet::symmetric_closure(2, {{1, 0}, {0, -3}});
  EXPECT_EQ(d.size(), 4U);
  EXPECT_EQ(d.max_abs(), 3);
  EXPECT_TRUE(d.contains({0, 3}));
}

TEST(DifferenceMatrix, RequiresAntisymmetry) {
  DifferenceMatrix ok(2, {{}, {1}, {-1}, {}});
  EXPECT_EQ(ok.max_d(), 1);
  EXPECT_THROW(DifferenceMatrix(2, {{}, {1}, {1}, {}}), InvalidInput);
  DifferenceMatrix empty(2, {{}, {}, {}, {}});
  EXPECT_TRUE(empty.all_empty());
  EXPECT_EQ(empty.max_d(), 0);
}

TEST(TrigPoly, EvaluatesOnTheCircle) {
  TrigPoly f(DifferenceSet({1, 2}), {Complex(1, 0), Complex(0, 1)});
  const double t = 0.7;
  Complex z = std::polar(1.0, t);
  EXPECT_NEAR(std::abs(f.value(z) - (z + Complex(0, 1) * z * z)), 0.0, 1e-14);
  EXPECT_NEAR(f.re_at_angle(t), std::cos(t) - std::sin(2 * t), 1e-14);
  EXPECT_NEAR(f.re_derivative_at_angle(t), -std::sin(t) - 2 * std::cos(2 * t), 1e-14);
  EXPECT_NEAR(std::abs(f.value_at_root_of_unity(3, 7) - f.value(std::polar(1.0, 2 * std::numbers::pi * 3 / 7))),
              0.0, 1e-13);
}

TEST(ClosedForms, ConsecutiveBound) {
  EXPECT_EQ(consecutive_bound(1, 3), q(1, 4));
  EXPECT_EQ(consecutive_bound(2, 3), q(2, 5));
  for (int d = 1; d < 6; ++d) EXPECT_EQ(consecutive_bound(d, d), q(1, 2));
  EXPECT_THROW(consecutive_bound(3, 2), InvalidInput);
  EXPECT_THROW(consecutive_bound(0, 2), InvalidInput);
}

TEST(ClosedForms, PairAlpha) {
  EXPECT_EQ(pair_alpha(1, 2), q(1, 3));
  EXPECT_EQ(pair_alpha(1, 3), q(1, 2));
  EXPECT_EQ(pair_alpha(2, 3), q(2, 5));
  EXPECT_THROW(pair_alpha(2, 4), InvalidInput);
  EXPECT_THROW(pair_alpha(3, 3), InvalidInput);
}

TEST(ClosedForms, PairAlphaIsSymmetricAndDominatesConsecutive) {
  for (int a = 1; a <= 15; ++a) {
    for (int b = 1; b <= 15; ++b) {
      if (a == b || std::gcd(a, b) != 1) continue;
      EXPECT_EQ(pair_alpha(a, b), pair_alpha(b, a));
    }
    EXPECT_LE(consecutive_bound(a, a + 1), pair_alpha(a, a + 1));
  }
}

TEST(ClosedForms, UnionBound) {
  EXPECT_EQ(union_bound(q(1, 2), q(1, 2)), q(1, 4));
  EXPECT_EQ(union_bound(Rational(1), q(3, 7)), q(3, 7));
  EXPECT_EQ(union_bound(q(1, 3), q(2, 5)), q(2, 15));
  EXPECT_THROW(union_bound(q(3, 2), q(1, 2)), InvalidInput);
}

TEST(ClosedForms, SegmentsProductBound) {
  EXPECT_EQ(segments_product_bound({{Rational(1), Rational(2)}}).value, q(1, 3));
  EXPECT_EQ(segments_product_bound({{Rational(4), Rational(4)}}).value, q(1, 2));
  SegmentList two{{Rational(1), Rational(2)}, {Rational(4), Rational(5)}};
  EXPECT_EQ(segments_product_bound(two).value, q(4, 27));
  EXPECT_THROW(segments_product_bound({{Rational(0), Rational(1)}}), InvalidInput);
  EXPECT_THROW(segments_product_bound({{Rational(2), Rational(1)}}), InvalidInput);
}

TEST(ClosedForms, SegmentsRoundedProductUsesCeilAndFloor) {
  auto b = segments_product_bound({{q(3, 2), q(7, 2)}});
  EXPECT_EQ(b.value, q(3, 10));
  EXPECT_EQ(b.rounded, q(2, 5));  // 2 / (2 + 3)
  EXPECT_EQ(segments_product_bound({{q(1, 3), q(2, 3)}}).rounded, Rational(1));
}

TEST(ClosedForms, SegmentsProductIsMultiplicativeOverConcatenation) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> pick(1, 9);
  for (int t = 0; t < 50; ++t) {
    SegmentList a;
    SegmentList b;
    for (int k = 0; k < 3; ++k) {
      int lo = pick(rng);
      a.push_back({Rational(lo), Rational(lo + pick(rng))});
      lo = pick(rng);
      b.push_back({q(lo, 2), q(lo + pick(rng), 2)});
    }
    SegmentList ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    EXPECT_EQ(segments_product_bound(ab).value,
              segments_product_bound(a).value * segments_product_bound(b).value);
  }
}

TEST(ClosedForms, TwoCosineBound) {
  EXPECT_EQ(two_cosine_bound(1, 2), q(1, 3));
  EXPECT_EQ(two_cosine_bound(2, 3), q(2, 5));
  EXPECT_EQ(two_cosine_bound(1, 4), q(2, 5));
  EXPECT_THROW(two_cosine_bound(1, 3), InvalidInput);
  EXPECT_THROW(two_cosine_bound(2, 4), InvalidInput);
}

TEST(ClosedForms, NormalizeScalesPositively) {
  TrigPoly f(DifferenceSet({1}), {Complex(2, 0)});
  EXPECT_NEAR(normalize(f).coeffs()[0].real(), 1.0, 1e-15);
  TrigPoly g(DifferenceSet({1, 2}), {Complex(1, 0), Complex(1, 0)});
  auto gn = normalize(g);
  EXPECT_NEAR(gn.coeffs()[0].real(), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(gn.coeffs()[1].real(), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_THROW(normalize(TrigPoly(DifferenceSet({1}), {Complex(0, 0)})), InvalidInput);
}

TEST(ClosedForms, NormalizeIsIdempotentAndKeepsPhases) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> n01;
  for (int t = 0; t < 50; ++t) {
    std::vector<Complex> c(4);
    for (auto& x : c) x = {n01(rng), n01(rng)};
    TrigPoly f(DifferenceSet({1, 2, 5, 9}), c);
    auto once = normalize(f);
    auto twice = normalize(once);
    EXPECT_TRUE(once.is_normalized());
    for (std::size_t i = 0; i < c.size(); ++i) {
      EXPECT_NEAR(std::abs(once.coeffs()[i] - twice.coeffs()[i]), 0.0, 1e-12);
      EXPECT_NEAR(std::arg(once.coeffs()[i]), std::arg(c[i]), 1e-12);
    }
  }
}

TEST(LaurentPoly, ConjugateReflectsExponents) {
  auto z = LaurentPoly::monomial(1.0, 1);
  EXPECT_EQ(laurent_conjugate(z), LaurentPoly::monomial(1.0, -1));
  auto f = LaurentPoly::monomial(Complex(1, 1), 2);
  EXPECT_EQ(laurent_conjugate(f), LaurentPoly::monomial(Complex(1, -1), -2));
  auto g = f + LaurentPoly::monomial(Complex(0.5, -2), -3) + LaurentPoly::constant(4.0);
  EXPECT_EQ(laurent_conjugate(laurent_conjugate(g)), g);
}

TEST(LaurentPoly, ConjugateMatchesComplexConjugateOnTheCircle) {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> n01;
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
  LaurentPoly f;
  for (int k = -3; k <= 4; ++k) f += LaurentPoly::monomial(Complex(n01(rng), n01(rng)), k);
  LaurentPoly fc = laurent_conjugate(f);
  for (int t = 0; t < 64; ++t) {
    Complex z = std::polar(1.0, angle(rng));
    EXPECT_NEAR(std::abs(fc(z) - std::conj(f(z))), 0.0, 1e-12);
  }
}

TEST(LaurentPoly, ArithmeticDropsExactZeros) {
  auto a = LaurentPoly::monomial(2.0, 1) + LaurentPoly::constant(1.0);
  auto b = LaurentPoly::monomial(2.0, 1);
  EXPECT_EQ(a - b, LaurentPoly::constant(1.0));
  EXPECT_TRUE((b - b).is_zero());
  auto p = (LaurentPoly::monomial(1.0, 1) + LaurentPoly::monomial(1.0, -1)) *
           (LaurentPoly::monomial(1.0, 1) - LaurentPoly::monomial(1.0, -1));
  EXPECT_EQ(p, LaurentPoly::monomial(1.0, 2) - LaurentPoly::monomial(1.0, -2));
}

TEST(LaurentMatrix, SelfConjugacyAndMajorization) {
  auto z = LaurentPoly::monomial(1.0, 1);
  auto zi = LaurentPoly::monomial(1.0, -1);
  LaurentMatrix f(2, {LaurentPoly(), z, zi, LaurentPoly()});
  EXPECT_TRUE(f.is_self_conjugate());
  EXPECT_TRUE(f.majorized_by(DifferenceMatrix(2, {{}, {1}, {-1}, {}})));
  EXPECT_FALSE(f.majorized_by(DifferenceMatrix(2, {{}, {2}, {-2}, {}})));
  LaurentMatrix g(2, {LaurentPoly(), z, z, LaurentPoly()});
  EXPECT_FALSE(g.is_self_conjugate());
}
