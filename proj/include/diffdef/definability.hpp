#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "diffdef/formula.hpp"
#include "diffdef/substitution.hpp"

namespace diffdef {

enum class Mode { Explicit, Curve, GeneralCurve, Multi };

std::string to_string(Mode m);
/// Throws HypothesisError for unknown names.
Mode mode_from_string(const std::string& s);

/// One replayable step. Item 0 of a trace is its input; step k produces item k + 1.
struct TraceStep {
  enum class Kind { Substitute, Combine, Divide, Witness };
  Kind kind = Kind::Combine;
  std::size_t source = 0;                      // Substitute, Divide
  AffineMap map;                               // Substitute
  std::vector<std::size_t> items;              // Combine
  std::vector<RationalFunction> coefficients;  // Combine
  unsigned exponent = 0;                       // Divide: by u1^exponent
  Var var;                                     // Witness
  DiffPoly result;                             // Witness: the witness expression

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct DerivationTrace {
  Mode mode = Mode::Curve;
  GraphChain chain = GraphChain::single();
  RelationSpec relation;
  /// u-coordinates of the defining equation (curve, multi), or f with y = f(x) (explicit).
  DiffPoly input;
  std::vector<TraceStep> steps;
  /// The formula emitted together with this trace.
  Formula formula;

  std::size_t item_count() const { return steps.size() + 1; }
  const DiffPoly& item(std::size_t i) const { return i == 0 ? input : steps.at(i - 1).result; }
  /// Index of the last item produced by a non-witness step (0 if none).
  std::size_t terminal_index() const;
  const DiffPoly& terminal() const { return item(terminal_index()); }
  /// Variable defined to equal Dx: y for explicit/curve, y1 for multi.
  Var target() const;
};

/// item * u1^u_power = sum over maps of coefficient * input^map
struct Expansion {
  std::map<AffineMap, RationalFunction> terms;
  unsigned u_power = 0;
};

/// Expansions of every item, derived from the step structure alone.
/// Throws Error on an ill-formed trace (bad indices, mixed powers of u1).
std::vector<Expansion> expansions(const DerivationTrace& trace);

/// The output formula determined by a trace (and the witnesses its quantifiers need).
struct BuiltFormula {
  Formula formula;
  Witnesses witnesses;
};
BuiltFormula formula_from_trace(const DerivationTrace& trace);

struct Definition {
  Formula formula;
  DerivationTrace trace;
  Witnesses witnesses;

  Relations relations() const { return {{trace.relation.name, trace.relation}}; }
};

/// collapse_to_graph of every defining equation is zero.
bool contains_graph(const RelationSpec& spec, const GraphChain& chain);

/// y = f(x) with ord_x(f) >= 1: an existential definition of y = Dx.
Definition define_from_explicit(const DiffPoly& f);

/// A relation f(x, y) = 0 (y may also be written through u = y - Dx) containing the graph.
Definition define_from_curve(const DiffPoly& f);

/// f = 0 together with a side condition psi over the slot variables x, y.
Definition define_from_general_curve(const DiffPoly& f, const Formula& side);

/// f(x, y1 ... yn) = 0 (or in u1 ... un) with n the longest chain level occurring unless given.
Definition define_from_multi(const DiffPoly& f, std::optional<unsigned> n = std::nullopt);

/// psi_i(x, y_i) defining y_i = D^i x by chaining the multi definition phi(x, y1),
/// with witnesses for every quantified variable.
BuiltFormula chain_formula(const Definition& multi, unsigned i);

/// Graded weighted reverse-lexicographic order used by the curve loop:
/// total degree first, then exponents compared from the heaviest indeterminate down,
/// where D^k x weighs k and D^k u_i weighs k + i.
int compare_weighted(const Monomial& a, const Monomial& b, const GraphChain& chain);
const Monomial& leading_monomial(const DiffPoly& g, const GraphChain& chain);

/// s with s*p having coprime polynomial coefficients, integer content 1, positive leading coefficient.
RationalFunction primitive_scale(const DiffPoly& p);

/// The substitutions tried, in order, by the reduction loops.
const std::vector<AffineMap>& fallback_maps();

}  // namespace diffdef
