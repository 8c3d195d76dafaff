#pragma once

#include <map>
#include <vector>

#include "diffdef/formula.hpp"

namespace diffdef {

struct NonzeroWitness {
  std::map<Var, UPoly> values;
  RationalFunction value;  // f at the witness, nonzero
  Integer height;          // largest coefficient height used
};

/// Polynomials p_v(t) of degree ord_v(f) with nonnegative rational coefficients such that
/// f(p) != 0. Tuples are searched in increasing coefficient height, so the first hit has
/// minimal height. Throws HypothesisError for f = 0.
NonzeroWitness nonzero_witness(const DiffPoly& f);

/// A formula with parameter slots that defines D whenever guard(params) != 0.
struct GuardedFormula {
  Formula formula;
  DiffPoly guard;
  std::vector<Var> params;
};

struct Deparametrized {
  Formula formula;
  std::map<Var, UPoly> values;
};

/// Substitutes a nonzero witness of the guard into the parameter slots.
Deparametrized deparametrize(const GuardedFormula& gf);

}  // namespace diffdef
