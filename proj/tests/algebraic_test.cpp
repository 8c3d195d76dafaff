#include <gtest/gtest.h>

#include "diffdef/algebraic.hpp"
#include "diffdef/errors.hpp"
#include "diffdef/parse.hpp"
#include "diffdef/substitution.hpp"
#include "diffdef/verify.hpp"

using namespace diffdef;

namespace {

DiffPoly p(const char* s) { return parse_poly(s); }

const Var Z = Var::z();

}  // namespace

TEST(Resultant, Linear) {
  // Res_z(z - a, z - b) = b - a, up to sign conventions: check that it vanishes iff a = b
  const DiffPoly r = resultant(p("z - x"), p("z - y"), Z);
  EXPECT_TRUE(r == p("y - x") || r == p("x - y"));
}

TEST(Resultant, Quadratic) {
  // Res_z(z^2 - x, z - y) = y^2 - x
  const DiffPoly r = resultant(p("z^2 - x"), p("z - y"), Z);
  EXPECT_TRUE(r == p("y^2 - x") || r == p("x - y^2"));
  // common root when x = y^2
  EXPECT_TRUE(resultant(p("z^2 - y^2"), p("z - y"), Z).is_zero());
}

TEST(Resultant, CoefficientsIn) {
  const auto c = coefficients_in(p("x*z^2 + t*z - 1"), Z);
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c[0], p("-1"));
  EXPECT_EQ(c[1], p("t"));
  EXPECT_EQ(c[2], p("x"));
  EXPECT_THROW(coefficients_in(p("z'"), Z), HypothesisError);
}

TEST(Separable, Detection) {
  EXPECT_TRUE(is_separable(p("(x' + 1)*(y^2 - t)"), Var::y()));
  EXPECT_FALSE(is_separable(p("x'*y + x"), Var::y()));
}

TEST(AlgebraicFront, Construction) {
  const DiffPoly f = p("(x' - y)*(x'' + y*x)");
  const AlgebraicFront front = algebraic_front(f, p("x' - y"));
  EXPECT_EQ(front.order, 2u);
  EXPECT_EQ(front.lifted_factor, p("y1 - z"));
  EXPECT_TRUE(front.formula.is_existential());
  EXPECT_EQ(front.formula.to_string(), "exists z. (E(x, z) & y1 - z = 0)");

  const AlgebraicReport r = algebraic_report(front, ModelConfig{}, 50);
  EXPECT_TRUE(r.resultant_vanishes_on_graph);
  EXPECT_TRUE(r.resultant_nonzero);
  EXPECT_TRUE(r.passed()) << r.to_json().dump();
}

TEST(AlgebraicFront, HypothesisErrors) {
  EXPECT_THROW(algebraic_front(p("x' - y'"), p("x' - y'")), HypothesisError);            // ord_y > 0
  EXPECT_THROW(algebraic_front(p("x - y"), p("x - y")), HypothesisError);                // ord_x = 0
  EXPECT_THROW(algebraic_front(p("(x' + 1)*(y - t)"), p("y - t")), HypothesisError);     // splits
  EXPECT_THROW(algebraic_front(p("(x' - y)*(x + y)"), p("x' + y")), HypothesisError);   // not a factor
  EXPECT_THROW(algebraic_front(p("(x' - y)*(x + y)"), p("x + y")), HypothesisError);    // no derivative
}
