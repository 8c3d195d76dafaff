#include <gtest/gtest.h>

#include "diffdef/errors.hpp"
#include "diffdef/formula.hpp"
#include "diffdef/parse.hpp"

using namespace diffdef;

namespace {

AlgTerm a(const char* s) { return AlgTerm(parse_poly(s)); }

const Var X = Var::x();
const Var Y = Var::y();
const Var Z = Var::z();

Relations graph_relation() { return {{"E", RelationSpec{"E", {X, Y}, {parse_poly("y - x'")}, std::nullopt}}}; }

}  // namespace

TEST(AlgTerm, RejectsDerivatives) {
  EXPECT_THROW(a("x'"), HypothesisError);
  EXPECT_NO_THROW(a("t*x + y^2"));
}

TEST(Formula, ConstructorsNormalize) {
  const Formula e = Formula::rel("E", {a("x"), a("y")});
  EXPECT_EQ(Formula::conj({e}), e);
  EXPECT_EQ(Formula::conj({Formula::conj({e, e}), e}).children().size(), 3u);
  EXPECT_EQ(Formula::exists({Z}, Formula::exists({Var::z(1)}, e)).vars().size(), 2u);
  EXPECT_EQ(Formula::ne(a("x")).kind(), Formula::Kind::Not);
}

TEST(Formula, Printing) {
  const Formula f = Formula::exists(
      {Z}, Formula::conj({Formula::rel("E", {a("t*x"), a("x + t*z")}), Formula::eq(a("z - y"))}));
  EXPECT_EQ(f.to_string(), "exists z. (E(t*x, x + t*z) & -y + z = 0)");
  EXPECT_EQ(Formula::ne(a("x")).to_string(), "x != 0");
  EXPECT_EQ(Formula::neg(Formula::rel("E", {a("x"), a("y")})).to_string(), "!E(x, y)");
}

TEST(Formula, Variables) {
  const Formula f = parse_formula("exists z. (E(x, z) & z - y = 0)");
  EXPECT_EQ(f.free_variables(), (std::set<Var>{X, Y}));
  EXPECT_EQ(f.atom_variables(), (std::set<Var>{X, Y, Z}));
  EXPECT_TRUE(f.is_existential());
  EXPECT_FALSE(f.is_quantifier_free());
}

TEST(Formula, SubstitutionRespectsBinding) {
  const Formula f = parse_formula("exists z. E(x, z) & E(z, x)");
  const Formula g = f.substitute({{X, parse_poly("t")}, {Z, parse_poly("1")}});
  EXPECT_EQ(g.to_string(), "(exists z. E(t, z)) & E(1, t)");
}

TEST(Formula, JsonRoundTrip) {
  const Formula f = parse_formula("exists z1, z2. (E(x, z1) & !(z2 = 0) | x*y != 0)");
  const nlohmann::json j = f.to_json();
  EXPECT_EQ(j.at("kind"), "exists");
  EXPECT_EQ(Formula::from_json(j), f);
  EXPECT_EQ(Formula::from_json(nlohmann::json::parse(j.dump())), f);
}

TEST(Formula, ExactEvaluation) {
  const RatfunModel m;
  const RationalFunction T = RationalFunction::t();
  const Formula e = parse_formula("E(x, y)");
  EXPECT_TRUE(eval_formula(e, m, {{X, T * T}, {Y, 2 * T}}, graph_relation()));
  EXPECT_FALSE(eval_formula(e, m, {{X, T * T}, {Y, T}}, graph_relation()));
  const Formula ex = parse_formula("exists z. (E(x, z) & z - y = 0)");
  EXPECT_TRUE(eval_formula(ex, m, {{X, T * T}, {Y, 2 * T}}, graph_relation(), {{Z, parse_poly("x'")}}));
  EXPECT_THROW(eval_formula(ex, m, {{X, T}, {Y, 1}}, graph_relation()), Inconclusive);
  EXPECT_THROW(eval_formula(parse_formula("F(x)"), m, {{X, T}}, graph_relation()), HypothesisError);
}
