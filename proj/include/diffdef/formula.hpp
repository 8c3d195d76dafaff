#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "diffdef/diffpoly.hpp"
#include "diffdef/errors.hpp"

namespace diffdef {

/// A polynomial without derivative indeterminates: the only terms the reduct language has.
class AlgTerm {
 public:
  AlgTerm() = default;
  /// Throws HypothesisError if p mentions a derivative of order > 0.
  explicit AlgTerm(DiffPoly p);

  const DiffPoly& poly() const noexcept { return p_; }
  std::string to_string() const { return p_.to_string(); }
  friend bool operator==(const AlgTerm&, const AlgTerm&) = default;

 private:
  DiffPoly p_;
};

class Formula {
 public:
  enum class Kind { Eq, Rel, And, Or, Not, Exists };

  /// term = 0
  static Formula eq(AlgTerm term);
  /// term != 0, i.e. Not(Eq(term))
  static Formula ne(AlgTerm term);
  static Formula rel(std::string name, std::vector<AlgTerm> args);
  /// Conjunction; nested conjunctions are flattened and a single child is returned as is.
  static Formula conj(std::vector<Formula> children);
  static Formula disj(std::vector<Formula> children);
  static Formula neg(Formula child);
  /// Nested quantifiers are merged into one node.
  static Formula exists(std::vector<Var> vars, Formula body);

  Kind kind() const noexcept { return kind_; }
  const AlgTerm& term() const { return args_.front(); }
  const std::string& name() const noexcept { return name_; }
  const std::vector<AlgTerm>& args() const noexcept { return args_; }
  const std::vector<Formula>& children() const noexcept { return children_; }
  const std::vector<Var>& vars() const noexcept { return vars_; }

  bool is_quantifier_free() const;
  bool is_existential() const;
  /// Every variable occurring in an atom (bound or free).
  std::set<Var> atom_variables() const;
  std::set<Var> free_variables() const;

  /// Replaces free occurrences of variables by polynomials (variable-free or algebraic).
  Formula substitute(const std::map<Var, DiffPoly>& values) const;

  std::string to_string() const;
  nlohmann::json to_json() const;
  static Formula from_json(const nlohmann::json& j);

  friend bool operator==(const Formula&, const Formula&) = default;

 private:
  Kind kind_ = Kind::And;
  std::string name_;
  std::vector<AlgTerm> args_;
  std::vector<Formula> children_;
  std::vector<Var> vars_;
};

/// formula := disj ; disj := conj ('|' conj)* ; conj := unary ('&' unary)*
/// unary := '!' unary | 'exists' var (',' var)* '.' unary | '(' disj ')' | atom
/// atom := NAME '(' poly (',' poly)* ')' | poly ('=' | '!=') poly
Formula parse_formula(std::string_view text);

/// A relation symbol and the differential equations carving it out of F^arity.
/// The optional side formula is a conjunct over the slot variables (general-sense curves).
struct RelationSpec {
  std::string name = "E";
  std::vector<Var> slots;
  std::vector<DiffPoly> equations;
  std::optional<Formula> side;

  std::size_t arity() const { return slots.size(); }
};

using Relations = std::map<std::string, RelationSpec>;
/// Witness expressions for existentially bound variables; they may use D and earlier variables.
using Witnesses = std::map<Var, DiffPoly>;

/// Satisfaction of a formula in a model. The model supplies
///   Value eval(const DiffPoly&, const std::map<Var, Value>&) const;
///   bool is_zero(const Value&) const;
/// Throws Inconclusive for an unwitnessed quantifier.
template <class Model>
bool eval_formula(const Formula& phi, const Model& model, const std::map<Var, typename Model::Value>& assignment,
                  const Relations& relations, const Witnesses& witnesses = {}) {
  using Value = typename Model::Value;
  switch (phi.kind()) {
    case Formula::Kind::Eq:
      return model.is_zero(model.eval(phi.term().poly(), assignment));
    case Formula::Kind::Rel: {
      auto it = relations.find(phi.name());
      if (it == relations.end()) throw HypothesisError("unknown relation " + phi.name());
      const RelationSpec& spec = it->second;
      if (spec.arity() != phi.args().size())
        throw HypothesisError("relation " + phi.name() + " expects " + std::to_string(spec.arity()) + " arguments");
      std::map<Var, Value> slots;
      for (std::size_t i = 0; i < spec.arity(); ++i) slots.emplace(spec.slots[i], model.eval(phi.args()[i].poly(), assignment));
      for (const auto& e : spec.equations)
        if (!model.is_zero(model.eval(e, slots))) return false;
      return !spec.side || eval_formula(*spec.side, model, slots, relations, witnesses);
    }
    case Formula::Kind::And:
      for (const auto& c : phi.children())
        if (!eval_formula(c, model, assignment, relations, witnesses)) return false;
      return true;
    case Formula::Kind::Or:
      for (const auto& c : phi.children())
        if (eval_formula(c, model, assignment, relations, witnesses)) return true;
      return false;
    case Formula::Kind::Not:
      return !eval_formula(phi.children().front(), model, assignment, relations, witnesses);
    case Formula::Kind::Exists: {
      std::map<Var, Value> extended = assignment;
      for (const auto& v : phi.vars()) {
        auto w = witnesses.find(v);
        if (w == witnesses.end()) throw Inconclusive("cannot decide: no witness for " + v.to_string());
        extended.insert_or_assign(v, model.eval(w->second, extended));
      }
      return eval_formula(phi.children().front(), model, extended, relations, witnesses);
    }
  }
  return false;
}

/// Exact model over Q(t): values are rational functions.
struct RatfunModel {
  using Value = RationalFunction;
  Value eval(const DiffPoly& p, const std::map<Var, Value>& assignment) const;
  bool is_zero(const Value& v) const { return v.is_zero(); }
};

}  // namespace diffdef
