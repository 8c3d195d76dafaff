#pragma once

#include <vector>

#include "diffdef/formula.hpp"

namespace diffdef {

/// phi(x, y1..yn) = exists z. (E(x, z) & p~(x, y1..yn, z) = 0) for E given by f(x, y) = 0.
struct AlgebraicFront {
  Formula formula;
  RelationSpec relation;
  unsigned order = 0;  // n = ord_x(f)
  /// p with D^k x -> y_k and y -> z.
  DiffPoly lifted_factor;
  /// Res_z(f(x, z), p~(x, y1..yn, z)): vanishes wherever phi holds.
  DiffPoly resultant;
};

/// Checks ord_y(f) = 0 < ord_x(f), that f does not split as g(x)h(y), and that p divides f
/// and depends on y and on a proper derivative of x. Throws HypothesisError otherwise.
AlgebraicFront algebraic_front(const DiffPoly& f, const DiffPoly& p);

/// True iff f = g(x-part) * h(y) for polynomials g, h.
bool is_separable(const DiffPoly& f, const Var& y);

/// Univariate resultant in v of two polynomials with coefficients in the remaining variables.
DiffPoly resultant(const DiffPoly& a, const DiffPoly& b, const Var& v);

/// Coefficients of f as a polynomial in v (order 0 only), index = power of v.
std::vector<DiffPoly> coefficients_in(const DiffPoly& f, const Var& v);

}  // namespace diffdef
