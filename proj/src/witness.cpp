#include "diffdef/witness.hpp"

#include <algorithm>
#include <numeric>

#include "diffdef/substitution.hpp"

namespace diffdef {

namespace {

// Nonnegative rationals p/q in lowest terms, ordered by (height, q, p): 0, 1, 2, 1/2, 3, 1/3, 3/2, 2/3 ...
class HeightLadder {
 public:
  const Rational& at(std::size_t i) {
    while (i >= values_.size()) grow();
    return values_[i];
  }
  /// Number of values of height <= h.
  std::size_t count_upto(unsigned h) {
    while (height_ < h) grow();
    return counts_[h];
  }

 private:
  void grow() {
    ++height_;
    const unsigned h = height_;
    if (h == 1) {
      values_.emplace_back(0);
      values_.emplace_back(1);
    } else {
      for (unsigned q = 1; q <= h; ++q)
        for (unsigned p = 0; p <= h; ++p) {
          if (std::max(p, q) != h || std::gcd(p, q) != 1) continue;
          values_.push_back(make_rational(Integer(p), Integer(q)));
        }
    }
    counts_.resize(h + 1, 0);
    counts_[h] = values_.size();
  }

  std::vector<Rational> values_;
  std::vector<std::size_t> counts_{0};
  unsigned height_ = 0;
};

}  // namespace

NonzeroWitness nonzero_witness(const DiffPoly& f) {
  if (f.is_zero()) throw HypothesisError("the zero polynomial has no nonzero witness");
  if (f.is_constant()) return {{}, f.constant_value(), Integer(1)};

  struct Slot {
    Var var;
    unsigned degree;
  };
  std::vector<Slot> slots;
  for (const auto& v : f.variables()) slots.push_back({v, *f.order_of(v)});
  // coefficient positions: for each slot, c_0 .. c_degree (the last one must be nonzero)
  std::vector<std::pair<std::size_t, unsigned>> positions;
  for (std::size_t s = 0; s < slots.size(); ++s)
    for (unsigned k = 0; k <= slots[s].degree; ++k) positions.emplace_back(s, k);

  HeightLadder ladder;
  for (unsigned h = 1;; ++h) {
    const std::size_t size = ladder.count_upto(h);
    const std::size_t below = ladder.count_upto(h - 1);
    std::vector<std::size_t> idx(positions.size(), 0);
    for (;;) {
      bool fresh = false;
      bool leading_zero = false;
      for (std::size_t p = 0; p < positions.size(); ++p) {
        if (idx[p] >= below) fresh = true;
        if (positions[p].second == slots[positions[p].first].degree && idx[p] == 0) leading_zero = true;
      }
      if (fresh && !leading_zero) {
        std::vector<std::vector<Rational>> coeffs(slots.size());
        for (std::size_t s = 0; s < slots.size(); ++s) coeffs[s].assign(slots[s].degree + 1, Rational(0));
        for (std::size_t p = 0; p < positions.size(); ++p)
          coeffs[positions[p].first][positions[p].second] = ladder.at(idx[p]);
        std::map<Var, RationalFunction> assignment;
        std::map<Var, UPoly> values;
        for (std::size_t s = 0; s < slots.size(); ++s) {
          UPoly poly(coeffs[s]);
          assignment.emplace(slots[s].var, RationalFunction(poly));
          values.emplace(slots[s].var, std::move(poly));
        }
        RationalFunction v = eval_ratfun(f, assignment);
        if (!v.is_zero()) return {std::move(values), std::move(v), Integer(h)};
      }
      // odometer, last position fastest
      std::size_t p = positions.size();
      while (p > 0) {
        --p;
        if (++idx[p] < size) break;
        idx[p] = 0;
        if (p == 0) {
          p = positions.size() + 1;
          break;
        }
      }
      if (p == positions.size() + 1 || positions.empty()) break;
    }
  }
}

Deparametrized deparametrize(const GuardedFormula& gf) {
  if (gf.guard.is_zero()) throw HypothesisError("guard polynomial is zero");
  for (const auto& v : gf.guard.variables())
    if (std::find(gf.params.begin(), gf.params.end(), v) == gf.params.end())
      throw HypothesisError("guard mentions " + v.to_string() + " which is not a parameter");
  NonzeroWitness w = nonzero_witness(gf.guard);
  std::map<Var, DiffPoly> subst;
  for (const auto& p : gf.params) {
    auto it = w.values.find(p);
    if (it == w.values.end()) {
      // unconstrained by the guard
      w.values.emplace(p, UPoly(1));
      it = w.values.find(p);
    }
    subst.emplace(p, DiffPoly(RationalFunction(it->second)));
  }
  return {gf.formula.substitute(subst), std::move(w.values)};
}

}  // namespace diffdef
