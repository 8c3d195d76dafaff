#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "diffdef/diffpoly.hpp"

namespace diffdef {

struct ModelConfig {
  unsigned truncation = 12;
  unsigned coeff_bound = 20;
  std::uint64_t seed = 1;
  Rational t_offset = 0;
};

/// a_0 + a_1 s + ... + a_{N-1} s^{N-1} + O(s^N) with derivation d/ds.
/// Only the first known_order coefficients are meaningful; the rest are kept
/// so that truncation stays uniform but never compared.
class TruncSeries {
 public:
  explicit TruncSeries(unsigned n = 2) : c_(n, Rational(0)), known_(n) {}
  TruncSeries(std::vector<Rational> coeffs, unsigned known);

  static TruncSeries constant(const Rational& c, unsigned n);
  /// The series s itself.
  static TruncSeries s(unsigned n);

  unsigned truncation() const { return static_cast<unsigned>(c_.size()); }
  unsigned known_order() const { return known_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& coeff(unsigned i) const { return c_[i]; }

  TruncSeries operator-() const;
  TruncSeries& operator+=(const TruncSeries& o);
  TruncSeries& operator-=(const TruncSeries& o);
  TruncSeries& operator*=(const Rational& k);
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  TruncSeries pow(unsigned e) const;
  /// Multiplicative inverse; requires a nonzero constant term.
  TruncSeries inverse() const;

  /// d/ds; known_order drops by one.
  TruncSeries derivative() const;

  /// Equality on the first min(known_order) coefficients.
  bool equals_upto(const TruncSeries& o) const;
  /// Throws Inconclusive when no coefficient is known.
  bool is_zero() const;

  std::string to_string() const;

 private:
  std::vector<Rational> c_;
  unsigned known_;
};

/// tau0 + s
TruncSeries interpret_t(const ModelConfig& cfg);
/// q(tau0 + s) expanded to the truncation; throws PoleError if the denominator vanishes at tau0.
TruncSeries interpret_ratfun(const RationalFunction& q, const ModelConfig& cfg);
/// Independent coefficients p/q with |p|, q <= coeff_bound.
TruncSeries random_generic(const ModelConfig& cfg, std::mt19937_64& rng);
/// D^k v evaluates to the k-th d/ds derivative of assignment(v).
/// Throws Inconclusive if the truncation is below max order + 2, HypothesisError for unassigned variables.
TruncSeries eval_diffpoly_series(const DiffPoly& f, const std::map<Var, TruncSeries>& assignment,
                                 const ModelConfig& cfg);

/// The first offset from cfg.t_offset, 1, 2, 3, ... at which no coefficient of the given
/// polynomials has a pole.
Rational pole_free_offset(const std::vector<DiffPoly>& polys, const ModelConfig& cfg);

/// Deterministic per-sample seed, independent of how samples are scheduled.
std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index);

struct SeriesModel {
  using Value = TruncSeries;
  ModelConfig cfg;
  Value eval(const DiffPoly& p, const std::map<Var, Value>& assignment) const {
    return eval_diffpoly_series(p, assignment, cfg);
  }
  bool is_zero(const Value& v) const { return v.is_zero(); }
};

}  // namespace diffdef
