#include <gtest/gtest.h>

#include "diffdef/errors.hpp"
#include "diffdef/formula.hpp"
#include "diffdef/parse.hpp"
#include "generators.hpp"

using namespace diffdef;

TEST(Parse, Precedence) {
  EXPECT_EQ(parse_poly("1 + 2*x^2"), DiffPoly(1) + DiffPoly(2) * DiffPoly::var(Var::x()).pow(2));
  EXPECT_EQ(parse_poly("-x^2"), -DiffPoly::var(Var::x()).pow(2));
  EXPECT_EQ(parse_poly("(x + 1)^2"), parse_poly("x^2 + 2*x + 1"));
  EXPECT_EQ(parse_poly("x/2 - t/3"), parse_poly("1/2*x - 1/3*t"));
}

TEST(Parse, DerivativeNotation) {
  EXPECT_EQ(parse_poly("D(x,2)"), DiffPoly::var(Var::x(), 2));
  EXPECT_EQ(parse_poly("x''"), parse_poly("D(x, 2)"));
  EXPECT_EQ(parse_poly("D(y1,0)"), DiffPoly::var(Var::y(1)));
  EXPECT_EQ(parse_poly("u2'"), DiffPoly::var(Var::u(2), 1));
}

TEST(Parse, Equations) {
  EXPECT_EQ(parse_equation("(y' - D(x,2)) * x' = 0"), parse_poly("x'*y' - x'*x''"));
  EXPECT_EQ(parse_equation("y = x''"), parse_poly("y - x''"));
  EXPECT_EQ(parse_equation("x*u1 + u2"), parse_poly("x*u1 + u2"));
}

TEST(Parse, RationalFunctions) {
  EXPECT_EQ(parse_ratfun("(t^2 - t)/(t + 1)").to_string(), "(t^2 - t)/(t + 1)");
  EXPECT_THROW(parse_ratfun("x"), ParseError);
}

TEST(Parse, ErrorsCarryPositions) {
  try {
    parse_poly("x + (y");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 6u);
  }
  EXPECT_THROW(parse_poly("x / y"), ParseError);
  EXPECT_THROW(parse_poly("x0"), ParseError);
  EXPECT_THROW(parse_poly("w"), ParseError);
  EXPECT_THROW(parse_poly("x^"), ParseError);
  EXPECT_THROW(parse_poly(""), ParseError);
  EXPECT_THROW(parse_poly("1/0"), Error);
}

TEST(Parse, Formulas) {
  const Formula f = parse_formula("exists z. (E(x, z) & z - y = 0) | !E(x, y)");
  EXPECT_EQ(f.kind(), Formula::Kind::Or);
  EXPECT_EQ(f.to_string(), "(exists z. (E(x, z) & -y + z = 0)) | !E(x, y)");
  EXPECT_EQ(parse_formula("x != 0").kind(), Formula::Kind::Not);
  EXPECT_THROW(parse_formula("E(x', y)"), Error);
  EXPECT_THROW(parse_formula("E(x, y"), ParseError);
}

TEST(ParseProperty, PrintParseRoundTrip) {
  gen::Gen g(31);
  const std::vector<Var> vars{Var::x(), Var::y(), Var::u(1), Var::z(2)};
  for (int i = 0; i < 200; ++i) {
    const DiffPoly f = g.diffpoly(vars, 3, 3, 4, 2);
    ASSERT_EQ(parse_poly(f.to_string()), f) << f.to_string();
  }
}
