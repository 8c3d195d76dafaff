#include <gtest/gtest.h>

#include "diffdef/definability.hpp"
#include "diffdef/errors.hpp"
#include "diffdef/parse.hpp"
#include "diffdef/verify.hpp"
#include "generators.hpp"

using namespace diffdef;

namespace {

DiffPoly p(const char* s) { return parse_poly(s); }

const Var X = Var::x();
const Var Y = Var::y();

bool proportional(const DiffPoly& a, const DiffPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a * b.terms().rbegin()->second == b * a.terms().rbegin()->second;
}

std::size_t combine_rounds(const DerivationTrace& t) {
  std::size_t n = 0;
  for (const auto& s : t.steps) n += s.kind == TraceStep::Kind::Combine;
  return n;
}

// Oracle: exact check that phi holds at (a, a') for a polynomial a in Q[t].
bool holds_on_graph(const Definition& d, const RationalFunction& a) {
  return eval_formula(d.formula, RatfunModel{}, {{X, a}, {d.trace.target(), a.derivative()}}, d.relations(),
                      d.witnesses);
}

}  // namespace

TEST(ContainsGraph, Examples) {
  const GraphChain c = GraphChain::single();
  EXPECT_TRUE(contains_graph({"E", {X, Y}, {p("(y' - x'')*x'")}, std::nullopt}, c));
  EXPECT_FALSE(contains_graph({"E", {X, Y}, {p("y - x")}, std::nullopt}, c));
  EXPECT_TRUE(contains_graph({"E", {X, Y}, {p("u*x")}, std::nullopt}, c));
}

TEST(Curve, WorkedExample) {
  const Definition d = define_from_curve(p("(y' - x'')*x'"));
  const DerivationTrace& t = d.trace;
  EXPECT_TRUE(d.formula.is_quantifier_free());
  EXPECT_EQ(t.terminal(), DiffPoly::var(Var::u()));
  const DiffPoly first = to_u_coordinates(p("t*x*(y' - x'') + t*x'*(y - x') + x*(y - x')"), t.chain);
  const DiffPoly second = to_u_coordinates(p("2*t^2*x*(y - x')"), t.chain);
  bool found = false;
  for (std::size_t i = 0; i + 2 < t.item_count(); ++i)
    if (proportional(t.item(i), first) && proportional(t.item(i + 2), second)) found = true;
  EXPECT_TRUE(found);
  for (int k = 0; k < 5; ++k) EXPECT_TRUE(holds_on_graph(d, RationalFunction(UPoly::monomial(1, k)) + k));
}

TEST(Curve, AlreadyTerminal) {
  const Definition d = define_from_curve(p("t*(y - x')"));
  EXPECT_TRUE(d.trace.steps.empty());
  EXPECT_EQ(d.formula.to_string(), "E(x, y)");
}

TEST(Curve, HypothesisErrors) {
  EXPECT_THROW(define_from_curve(p("y - x")), HypothesisError);
  EXPECT_THROW(define_from_curve(p("(y - x')*z")), HypothesisError);
  EXPECT_THROW(define_from_curve(DiffPoly()), HypothesisError);
}

TEST(Curve, LeadingMonomialStrictlyDecreases) {
  gen::Gen g(51);
  for (int i = 0; i < 20; ++i) {
    const Definition d = define_from_curve(g.graph_curve());
    const DerivationTrace& t = d.trace;
    std::optional<Monomial> prev;
    for (std::size_t k = 0; k < t.steps.size(); ++k) {
      if (t.steps[k].kind != TraceStep::Kind::Combine) continue;
      const Monomial lead = leading_monomial(t.steps[k].result, t.chain);
      const std::size_t src = t.steps[k].items.front();
      const Monomial before = leading_monomial(t.item(src), t.chain);
      ASSERT_LT(compare_weighted(lead, before, t.chain), 0);
      prev = lead;
    }
  }
}

TEST(Multi, WorkedExample) {
  const Definition d = define_from_multi(p("x*u1 + u2"));
  const DerivationTrace& t = d.trace;
  EXPECT_EQ(t.mode, Mode::Multi);
  EXPECT_TRUE(proportional(t.terminal(), p("(t^2 - t)*u1")));
  EXPECT_LE(combine_rounds(t), 3u);
  ASSERT_FALSE(t.steps.empty());
  EXPECT_EQ(t.steps.front().kind, TraceStep::Kind::Substitute);
  EXPECT_EQ(t.steps.front().result, p("t*x*t*u1 + t*u2 + 2*u1"));
  EXPECT_TRUE(d.formula.is_existential());
  EXPECT_EQ(t.target(), Var::y(1));
  for (int k = 0; k < 4; ++k) EXPECT_TRUE(holds_on_graph(d, RationalFunction(UPoly::monomial(1, k + 1)) - 3));
}

TEST(Multi, ChainFormula) {
  const Definition d = define_from_multi(p("x*u1 + u2"));
  const BuiltFormula psi = chain_formula(d, 2);
  const RationalFunction a = RationalFunction(UPoly::monomial(1, 4)) + RationalFunction::t();
  const Var y2 = Var::y(2);
  EXPECT_TRUE(psi.formula.free_variables().count(y2));
  EXPECT_TRUE(eval_formula(psi.formula, RatfunModel{}, {{X, a}, {y2, nth_derivative(a, 2)}}, d.relations(),
                           psi.witnesses));
  EXPECT_FALSE(eval_formula(psi.formula, RatfunModel{}, {{X, a}, {y2, a}}, d.relations(), psi.witnesses));
  EXPECT_THROW(chain_formula(define_from_curve(p("y - x'")), 1), HypothesisError);
}

TEST(Explicit, SecondDerivative) {
  const Definition d = define_from_explicit(p("x''"));
  EXPECT_TRUE(d.formula.is_existential());
  EXPECT_FALSE(d.witnesses.empty());
  for (int k = 0; k < 5; ++k) EXPECT_TRUE(holds_on_graph(d, RationalFunction(UPoly::monomial(2, k + 2)) + k));
}

TEST(Explicit, FirstDerivativeIsTheRelationItself) {
  const Definition d = define_from_explicit(p("x'"));
  EXPECT_EQ(d.formula.to_string(), "E(x, y)");
}

TEST(Explicit, HypothesisErrors) {
  EXPECT_THROW(define_from_explicit(p("x")), HypothesisError);
  EXPECT_THROW(define_from_explicit(p("x' + y")), HypothesisError);
}

TEST(Explicit, DegreeDecreasesAlongTheLoop) {
  gen::Gen g(53);
  for (int i = 0; i < 20; ++i) {
    const DiffPoly f = g.explicit_rhs();
    const Definition d = define_from_explicit(f);
    const unsigned n = *f.order_of(X);
    std::optional<DegreeVector> prev;
    for (std::size_t k = 0; k < d.trace.item_count(); ++k) {
      if (k > 0 && d.trace.steps[k - 1].kind != TraceStep::Kind::Combine) continue;
      const DegreeVector dv = n1_degree(d.trace.item(k), X, n);
      if (prev) ASSERT_LT(dv, *prev) << f.to_string();
      prev = dv;
    }
  }
}

TEST(GeneralCurve, SideConditionIsCarried) {
  const Formula side = parse_formula("x != 0");
  const Definition d = define_from_general_curve(p("(y - x')*x"), side);
  ASSERT_TRUE(d.trace.relation.side.has_value());
  EXPECT_EQ(*d.trace.relation.side, side);
  EXPECT_THROW(define_from_general_curve(p("y - x'"), parse_formula("z = 0")), HypothesisError);
}

TEST(Strategy, PrimitiveScale) {
  const DiffPoly f = p("(2*t^2 - 2*t)/3*x + (4*t - 4)/3");
  const DiffPoly g = f * primitive_scale(f);
  EXPECT_EQ(g, p("t*x + 2"));
}
