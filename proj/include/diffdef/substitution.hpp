#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "diffdef/diffpoly.hpp"

namespace diffdef {

/// Replaces each indeterminate for which `image` returns a value and expands.
/// Indeterminates mapped to nullopt are kept.
DiffPoly substitute(const DiffPoly& f, const std::function<std::optional<DiffPoly>(const DerIndet&)>& image);

/// D^k(alpha*v + beta) by the general Leibniz rule:
/// sum_j C(k,j) alpha^(j) D^(k-j) v + beta^(k).
DiffPoly affine_image(const RationalFunction& alpha, const RationalFunction& beta, const Var& v, unsigned k);

/// v -> alpha*v + beta, every D^k v expanded by affine_image. Throws HypothesisError if alpha = 0.
DiffPoly subst_affine(const DiffPoly& f, const Var& v, const RationalFunction& alpha, const RationalFunction& beta);

/// A graph-compatible coordinate change x -> alpha*x + beta, y -> alpha'*x + alpha*y + beta'.
struct AffineMap {
  RationalFunction alpha{1};
  RationalFunction beta{0};

  friend bool operator==(const AffineMap&, const AffineMap&) = default;
  friend std::strong_ordering operator<=>(const AffineMap& a, const AffineMap& b) {
    if (auto c = a.alpha <=> b.alpha; c != 0) return c;
    return a.beta <=> b.beta;
  }
  bool is_identity() const { return alpha.is_one() && beta.is_zero(); }
  std::string to_string() const;
};

/// The map with (g^first)^second = g^compose(first, second).
AffineMap compose(const AffineMap& first, const AffineMap& second);

/// The base variable together with its y-chain and the matching difference variables.
/// ys[i-1] plays the role of D^i x and us[i-1] = ys[i-1] - D^i x.
struct GraphChain {
  Var x = Var::x();
  std::vector<Var> ys;
  std::vector<Var> us;

  static GraphChain single() { return {Var::x(), {Var::y()}, {Var::u()}}; }
  static GraphChain multi(unsigned n);
  unsigned length() const { return static_cast<unsigned>(ys.size()); }
  /// Chain level of a y or u variable of this chain, 0 if it is not one of them.
  unsigned level_of(const Var& v) const;
  const Var& u1() const { return us.front(); }
};

/// The joint substitution induced by an AffineMap on x, the y-chain (pretending y_i = D^i x)
/// and the u-chain (u_0 = 0). Other variables are untouched.
DiffPoly subst_graph_pair(const DiffPoly& f, const GraphChain& chain, const AffineMap& map);

/// The algebraic images of x, y_1 ... y_n under `map` (orders all zero): entry 0 is x's image.
std::vector<DiffPoly> graph_pair_images(const GraphChain& chain, const AffineMap& map);

/// D^j y_i -> D^(i+j) x and D^j u_i -> 0.
DiffPoly collapse_to_graph(const DiffPoly& f, const GraphChain& chain);

/// D^j y_i -> D^j u_i + D^(i+j) x.
DiffPoly to_u_coordinates(const DiffPoly& f, const GraphChain& chain);

/// D^j u_i -> D^j y_i - D^(i+j) x.
DiffPoly from_u_coordinates(const DiffPoly& f, const GraphChain& chain);

/// Evaluates f with every D^k v sent to the k-th derivative of assignment(v).
/// Throws HypothesisError if a variable of f is unassigned.
RationalFunction eval_ratfun(const DiffPoly& f, const std::map<Var, RationalFunction>& assignment);

}  // namespace diffdef
