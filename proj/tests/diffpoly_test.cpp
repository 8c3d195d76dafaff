#include <gtest/gtest.h>

#include "diffdef/errors.hpp"
#include "diffdef/parse.hpp"
#include "diffdef/substitution.hpp"
#include "generators.hpp"

using namespace diffdef;

namespace {

DiffPoly p(const char* s) { return parse_poly(s); }

const Var X = Var::x();
const Var Y = Var::y();

}  // namespace

TEST(DiffPoly, CanonicalPrinting) {
  EXPECT_EQ(p("x' * (y' - x'')").to_string(), "-x'*x'' + x'*y'");
  EXPECT_EQ(p("(t^2 - t) * x").to_string(), "(t^2 - t)*x");
  EXPECT_EQ(p("3 - t").to_string(), "-t + 3");
  EXPECT_EQ(DiffPoly().to_string(), "0");
  EXPECT_EQ(p("x*x*y'").to_string(), "x^2*y'");
}

TEST(DiffPoly, DeriveExamples) {
  EXPECT_EQ(p("t*x").derive(), p("x + t*x'"));
  EXPECT_EQ(p("x^2").derive(), p("2*x*x'"));
  EXPECT_EQ(p("x").derive(3), p("x'''"));
  EXPECT_EQ(p("t^2").derive(), p("2*t"));
}

TEST(DiffPoly, OrdersAndDegrees) {
  const DiffPoly f = p("x*y'' + x'^3");
  EXPECT_EQ(f.order_of(X), 1u);
  EXPECT_EQ(f.order_of(Y), 2u);
  EXPECT_FALSE(f.order_of(Var::z()).has_value());
  EXPECT_EQ(f.max_order(), 2u);
  EXPECT_EQ(f.total_degree(), 3u);
}

TEST(DiffPoly, ExactDivision) {
  const DiffPoly a = p("x' + t*y");
  const DiffPoly b = p("x*x'' - y + 1");
  auto q = (a * b).divide_exact(b);
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, a);
  EXPECT_FALSE((a * b + 1).divide_exact(b).has_value());
}

TEST(DegreeVector, ReverseLexicographic) {
  EXPECT_LT((DegreeVector{{5, 0}}), (DegreeVector{{0, 1}}));
  EXPECT_LT((DegreeVector{{0, 1, 0}}), (DegreeVector{{1, 1}}));
  EXPECT_EQ((DegreeVector{{1, 2}}.to_string()), "(1,2)");
}

TEST(DegreeVector, N1Degree) {
  EXPECT_EQ(n1_degree(p("x^3*x' + x''"), X, 2), (DegreeVector{{0, 0, 1}}));
  EXPECT_EQ(n1_degree(p("x^3*x' + x*x'"), X, 1), (DegreeVector{{3, 1}}));
  EXPECT_THROW(n1_degree(DiffPoly(), X, 1), HypothesisError);
  EXPECT_THROW(n1_degree(p("x''"), X, 1), HypothesisError);
  EXPECT_THROW(n1_degree(p("y"), X, 1), HypothesisError);
}

TEST(DiffPolyProperty, RingAxioms) {
  gen::Gen g(7);
  for (int i = 0; i < 200; ++i) {
    const DiffPoly a = g.diffpoly({X, Y}, 2, 2, 3), b = g.diffpoly({X, Y}, 2, 2, 3), c = g.diffpoly({X, Y}, 2, 2, 3);
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_TRUE((a - a).is_zero());
  }
}

TEST(DiffPolyProperty, LeibnizLaw) {
  gen::Gen g(11);
  for (int i = 0; i < 200; ++i) {
    const DiffPoly a = g.diffpoly({X, Y}, 3, 3, 4, 2), b = g.diffpoly({X, Y}, 3, 3, 4, 2);
    ASSERT_EQ((a * b).derive(), a.derive() * b + a * b.derive());
    ASSERT_EQ((a + b).derive(), a.derive() + b.derive());
  }
}

TEST(DiffPolyProperty, EvaluationCommutesWithDerivation) {
  gen::Gen g(13);
  for (int i = 0; i < 200; ++i) {
    const DiffPoly f = g.diffpoly({X, Y}, 3, 3, 4, 2);
    const std::map<Var, RationalFunction> at{{X, g.ratfun(3, 5)}, {Y, g.ratfun(2, 5)}};
    ASSERT_EQ(eval_ratfun(f.derive(), at), eval_ratfun(f, at).derivative());
  }
}
