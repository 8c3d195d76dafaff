#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "diffdef/diffpoly.hpp"
#include "diffdef/substitution.hpp"

namespace gen {

using namespace diffdef;

// Seeded random objects for property tests. Every draw goes through one mt19937_64.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  Rational rational(long bound) {
    return make_rational(Integer(integer(-bound, bound)), Integer(integer(1, bound)));
  }
  Rational nonzero_rational(long bound) {
    Rational r;
    do r = rational(bound);
    while (r == 0);
    return r;
  }

  UPoly upoly(unsigned degree, long bound) {
    std::vector<Rational> c(degree + 1);
    for (auto& a : c) a = rational(bound);
    return UPoly(c);
  }
  UPoly nonzero_upoly(unsigned degree, long bound) {
    UPoly p;
    do p = upoly(degree, bound);
    while (p.is_zero());
    return p;
  }

  /// Usually a polynomial; with probability p_den a quotient by a monic nonconstant polynomial.
  RationalFunction ratfun(unsigned degree, long bound, double p_den = 0.2) {
    UPoly num = upoly(degree, bound);
    if (!coin(p_den)) return RationalFunction(num);
    std::vector<Rational> c(integer(2, 3));
    for (auto& a : c) a = rational(bound);
    c.back() = 1;
    return RationalFunction(num, UPoly(c));
  }
  RationalFunction nonzero_ratfun(unsigned degree, long bound, double p_den = 0.2) {
    RationalFunction r;
    do r = ratfun(degree, bound, p_den);
    while (r.is_zero());
    return r;
  }

  Monomial monomial(const std::vector<Var>& vars, unsigned max_order, unsigned degree) {
    Monomial m;
    for (unsigned i = 0; i < degree; ++i) {
      const Var& v = vars[integer(0, static_cast<long>(vars.size()) - 1)];
      m = m * Monomial(DerIndet{v, static_cast<unsigned>(integer(0, max_order))});
    }
    return m;
  }

  DiffPoly diffpoly(const std::vector<Var>& vars, unsigned max_order, unsigned max_degree, unsigned max_terms,
                    unsigned coeff_degree = 1, long bound = 5) {
    DiffPoly p;
    const long n = integer(1, max_terms);
    for (long i = 0; i < n; ++i) {
      const auto d = static_cast<unsigned>(integer(0, max_degree));
      p += DiffPoly(monomial(vars, max_order, d), ratfun(coeff_degree, bound));
    }
    return p;
  }
  DiffPoly nonzero_diffpoly(const std::vector<Var>& vars, unsigned max_order, unsigned max_degree,
                            unsigned max_terms, unsigned coeff_degree = 1, long bound = 5) {
    DiffPoly p;
    do p = diffpoly(vars, max_order, max_degree, max_terms, coeff_degree, bound);
    while (p.is_zero());
    return p;
  }

  /// A relation f(x, y) containing the graph of D: sums of products of D^k(y - x') with
  /// arbitrary cofactors, order <= 3, total degree <= 3, coefficients of degree <= 2 in t.
  DiffPoly graph_curve() {
    const Var x = Var::x();
    const Var y = Var::y();
    for (;;) {
      DiffPoly f;
      const long terms = integer(1, 3);
      for (long i = 0; i < terms; ++i) {
        const auto k = static_cast<unsigned>(integer(0, 2));
        DiffPoly u = DiffPoly::var(y, k) - DiffPoly::var(x, k + 1);
        unsigned degree = 1;
        if (coin(0.25)) {
          const auto k2 = static_cast<unsigned>(integer(0, 2));
          u = u * (DiffPoly::var(y, k2) - DiffPoly::var(x, k2 + 1));
          ++degree;
        }
        const auto cofactor_degree = static_cast<unsigned>(integer(0, 3 - degree));
        const Monomial m = monomial({x, x, y}, 2, cofactor_degree);
        f += u * DiffPoly(m, nonzero_ratfun(2, 4, 0.1));
      }
      if (!f.is_zero() && f.max_order() <= 3) return f;
    }
  }

  /// f(x) with 1 <= ord f <= 3, degree <= 2, coefficients of degree <= 1.
  DiffPoly explicit_rhs() {
    const Var x = Var::x();
    const auto ord = static_cast<unsigned>(integer(1, 3));
    for (;;) {
      DiffPoly f = diffpoly({x}, ord, 2, 3, 1, 4);
      f += DiffPoly(monomial({x}, 0, static_cast<unsigned>(integer(0, 1))) * Monomial(DerIndet{x, ord}),
                    nonzero_ratfun(1, 4, 0.0));
      if (f.order_of(x).value_or(0) == ord) return f;
    }
  }

  AffineMap affine_map(unsigned degree = 2, long bound = 4) {
    return {nonzero_ratfun(degree, bound), ratfun(degree, bound)};
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace gen
