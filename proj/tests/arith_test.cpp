#include <gtest/gtest.h>

#include "diffdef/errors.hpp"
#include "diffdef/ratfun.hpp"
#include "generators.hpp"

using namespace diffdef;

namespace {

UPoly P(std::initializer_list<int> c) {
  std::vector<Rational> v;
  for (int a : c) v.emplace_back(a);
  return UPoly(v);
}

const RationalFunction T = RationalFunction::t();

}  // namespace

TEST(UPoly, TrimsTrailingZeros) {
  EXPECT_TRUE(P({0, 0}).is_zero());
  EXPECT_EQ(P({1, 2, 0}).degree(), 1);
  EXPECT_EQ(UPoly().degree(), -1);
}

TEST(UPoly, Printing) {
  EXPECT_EQ(P({0, -1, 1}).to_string(), "t^2 - t");
  EXPECT_EQ(P({3}).to_string(), "3");
  EXPECT_EQ(UPoly().to_string(), "0");
}

TEST(UPoly, DivmodAndGcd) {
  const UPoly a = P({-1, 0, 1});  // t^2 - 1
  const UPoly b = P({1, 1});      // t + 1
  auto [q, r] = a.divmod(b);
  EXPECT_EQ(q, P({-1, 1}));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(gcd(a * P({2}), P({2, 2})), b);
  EXPECT_THROW(a.divmod(UPoly()), DivisionByZero);
}

TEST(UPoly, ShiftIsTaylorExpansion) {
  const UPoly p = P({1, 2, 3});
  EXPECT_EQ(p.shifted(Rational(2)).eval(Rational(5)), p.eval(Rational(7)));
}

TEST(RationalFunction, CanonicalForm) {
  const RationalFunction a(P({-1, 0, 1}), P({2, 2}));  // (t^2 - 1) / (2t + 2)
  EXPECT_EQ(a.num(), P({-1, 1}) * Rational(1, 2));
  EXPECT_TRUE(a.den().is_one());
  EXPECT_EQ(a, (T - 1) / 2);
  EXPECT_THROW(RationalFunction(P({1}), UPoly()), DivisionByZero);
  EXPECT_THROW(RationalFunction().inverse(), DivisionByZero);
}

TEST(RationalFunction, QuotientRule) {
  const RationalFunction q = (T * T + 1) / (T - 1);
  const RationalFunction expected = (T * T - 2 * T - 1) / ((T - 1) * (T - 1));
  EXPECT_EQ(q.derivative(), expected);
  EXPECT_EQ(nth_derivative(T.pow(3), 2), 6 * T);
}

TEST(RationalFunction, PoleAndPrinting) {
  const RationalFunction q = (T * T - T) / (T + 1);
  EXPECT_EQ(q.to_string(), "(t^2 - t)/(t + 1)");
  EXPECT_THROW(q.eval(Rational(-1)), PoleError);
  EXPECT_EQ(q.eval(Rational(1)), 0);
}

TEST(RationalFunctionProperty, FieldAxiomsAndDerivation) {
  gen::Gen g(101);
  for (int i = 0; i < 200; ++i) {
    const RationalFunction a = g.ratfun(2, 5), b = g.ratfun(2, 5), c = g.nonzero_ratfun(2, 5);
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ((a / c) * c, a);
    ASSERT_EQ((a * b).derivative(), a.derivative() * b + a * b.derivative());
    ASSERT_EQ((a / c).derivative(), (a.derivative() * c - a * c.derivative()) / (c * c));
    ASSERT_EQ(a - a, RationalFunction());
  }
}

TEST(UPolyProperty, GcdAgreesWithEuclidOverQ) {
  auto euclid = [](UPoly a, UPoly b) {
    while (!b.is_zero()) {
      UPoly r = a.divmod(b).second;
      a = std::move(b);
      b = r.monic();
    }
    return a.monic();
  };
  gen::Gen g(103);
  for (int i = 0; i < 200; ++i) {
    const UPoly c = g.upoly(2, 6);
    const UPoly a = g.upoly(3, 6) * c, b = g.upoly(3, 6) * c;
    const UPoly d = gcd(a, b);
    ASSERT_EQ(d, euclid(a, b));
    if (!c.is_zero() && !a.is_zero() && !b.is_zero()) ASSERT_TRUE(d.divmod(c.monic()).second.is_zero());
  }
}
