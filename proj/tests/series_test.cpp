#include <gtest/gtest.h>

#include "diffdef/errors.hpp"
#include "diffdef/parse.hpp"
#include "diffdef/series.hpp"
#include "diffdef/substitution.hpp"
#include "generators.hpp"

using namespace diffdef;

namespace {

const Var X = Var::x();
const Var Y = Var::y();
const RationalFunction T = RationalFunction::t();

TruncSeries series(std::initializer_list<int> c) {
  std::vector<Rational> v;
  for (int a : c) v.emplace_back(a);
  const auto n = static_cast<unsigned>(v.size());
  return TruncSeries(v, n);
}

}  // namespace

TEST(TruncSeries, Arithmetic) {
  const TruncSeries s = TruncSeries::s(5);
  EXPECT_TRUE((s * s).equals_upto(series({0, 0, 1, 0, 0})));
  EXPECT_TRUE(s.pow(5).is_zero());
  EXPECT_TRUE(series({1, -1, 0, 0, 0}).inverse().equals_upto(series({1, 1, 1, 1, 1})));
  EXPECT_THROW(s.inverse(), Error);
}

TEST(TruncSeries, DerivativeLosesOneCoefficient) {
  const TruncSeries a = series({1, 2, 3, 4});
  const TruncSeries d = a.derivative();
  EXPECT_EQ(d.known_order(), 3u);
  EXPECT_TRUE(d.equals_upto(series({2, 6, 12, 0})));
  EXPECT_THROW(series({1}).derivative().is_zero(), Inconclusive);
}

TEST(TruncSeries, Printing) { EXPECT_EQ(series({1, 0, -2}).to_string(), "1 - 2*s^2 + O(s^3)"); }

TEST(Interpretation, RationalFunctions) {
  ModelConfig cfg;
  cfg.truncation = 4;
  EXPECT_THROW(interpret_ratfun(T.inverse(), cfg), PoleError);
  cfg.t_offset = 1;
  // 1/(1 + s)
  EXPECT_TRUE(interpret_ratfun(T.inverse(), cfg).equals_upto(series({1, -1, 1, -1})));
  EXPECT_TRUE(interpret_t(cfg).equals_upto(series({1, 1, 0, 0})));
}

TEST(Interpretation, PoleFreeOffset) {
  ModelConfig cfg;
  const DiffPoly f = parse_poly("x/(t*(t - 1))");
  EXPECT_EQ(pole_free_offset({f}, cfg), 2);
  EXPECT_EQ(pole_free_offset({parse_poly("x")}, cfg), 0);
}

TEST(Evaluation, TruncationGuard) {
  ModelConfig cfg;
  cfg.truncation = 3;
  const std::map<Var, TruncSeries> at{{X, TruncSeries::s(3)}};
  EXPECT_THROW(eval_diffpoly_series(parse_poly("x''"), at, cfg), Inconclusive);
  EXPECT_THROW(eval_diffpoly_series(parse_poly("y"), at, cfg), HypothesisError);
}

TEST(Evaluation, SampleSeedsAreStable) {
  EXPECT_EQ(sample_seed(1, 5), sample_seed(1, 5));
  EXPECT_NE(sample_seed(1, 5), sample_seed(1, 6));
  EXPECT_NE(sample_seed(1, 5), sample_seed(2, 5));
}

TEST(SeriesProperty, DerivationCommutesWithEvaluation) {
  gen::Gen g(41);
  ModelConfig cfg;
  for (int i = 0; i < 100; ++i) {
    cfg.t_offset = g.integer(0, 3);
    const DiffPoly f = g.diffpoly({X, Y}, 3, 3, 4, 2);
    cfg.t_offset = pole_free_offset({f}, cfg);
    const std::map<Var, TruncSeries> at{{X, random_generic(cfg, g.rng())}, {Y, random_generic(cfg, g.rng())}};
    const TruncSeries lhs = eval_diffpoly_series(f.derive(), at, cfg);
    const TruncSeries rhs = eval_diffpoly_series(f, at, cfg).derivative();
    const unsigned known = std::min(lhs.known_order(), rhs.known_order());
    ASSERT_GT(known, 0u);
    for (unsigned k = 0; k < known; ++k) ASSERT_EQ(lhs.coeff(k), rhs.coeff(k)) << f.to_string();
  }
}

TEST(SeriesProperty, AgreesWithExactEvaluation) {
  gen::Gen g(43);
  ModelConfig cfg;
  for (int i = 0; i < 100; ++i) {
    const DiffPoly f = g.diffpoly({X, Y}, 3, 3, 4, 2);
    cfg.t_offset = pole_free_offset({f}, cfg);
    const RationalFunction a = g.upoly(3, 5), b = g.upoly(2, 5);
    const std::map<Var, TruncSeries> at{{X, interpret_ratfun(a, cfg)}, {Y, interpret_ratfun(b, cfg)}};
    const TruncSeries got = eval_diffpoly_series(f, at, cfg);
    const RationalFunction exact = eval_ratfun(f, {{X, a}, {Y, b}});
    const TruncSeries want = interpret_ratfun(exact, cfg);
    for (unsigned k = 0; k < got.known_order(); ++k) ASSERT_EQ(got.coeff(k), want.coeff(k)) << f.to_string();
  }
}
