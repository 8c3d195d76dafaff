#include "diffdef/substitution.hpp"

#include "diffdef/errors.hpp"

namespace diffdef {

namespace {

Rational binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Rational(r);
}

// Rewrites the x-derivatives of p: D^m x -> to(m), leaving other indeterminates alone.
DiffPoly relabel_x(const DiffPoly& p, const Var& x, const std::function<DiffPoly(unsigned)>& to) {
  return substitute(p, [&](const DerIndet& d) -> std::optional<DiffPoly> {
    if (d.var != x) return std::nullopt;
    return to(d.order);
  });
}

}  // namespace

DiffPoly substitute(const DiffPoly& f, const std::function<std::optional<DiffPoly>(const DerIndet&)>& image) {
  std::map<DerIndet, std::optional<DiffPoly>> cache;
  auto lookup = [&](const DerIndet& d) -> const std::optional<DiffPoly>& {
    auto it = cache.find(d);
    if (it == cache.end()) it = cache.emplace(d, image(d)).first;
    return it->second;
  };
  DiffPoly out;
  for (const auto& [m, c] : f.terms()) {
    Monomial kept;
    DiffPoly product(1);
    for (const auto& [d, e] : m.factors()) {
      const auto& img = lookup(d);
      if (!img) {
        kept = kept * Monomial(d, e);
      } else {
        product *= img->pow(e);
      }
      if (product.is_zero()) break;
    }
    if (product.is_zero()) continue;
    out += DiffPoly(kept, c) * product;
  }
  return out;
}

DiffPoly affine_image(const RationalFunction& alpha, const RationalFunction& beta, const Var& v, unsigned k) {
  DiffPoly r(nth_derivative(beta, k));
  RationalFunction a = alpha;
  for (unsigned j = 0; j <= k && !a.is_zero(); ++j) {
    r += DiffPoly::var(v, k - j) * (a * binomial(k, j));
    a = a.derivative();
  }
  return r;
}

DiffPoly subst_affine(const DiffPoly& f, const Var& v, const RationalFunction& alpha, const RationalFunction& beta) {
  if (alpha.is_zero()) throw HypothesisError("substitution with alpha = 0 is not a coordinate change");
  return substitute(f, [&](const DerIndet& d) -> std::optional<DiffPoly> {
    if (d.var != v) return std::nullopt;
    return affine_image(alpha, beta, v, d.order);
  });
}

std::string AffineMap::to_string() const {
  return "x -> " + affine_image(alpha, beta, Var::x(), 0).to_string();
}

AffineMap compose(const AffineMap& first, const AffineMap& second) {
  return {first.alpha * second.alpha, first.alpha * second.beta + first.beta};
}

GraphChain GraphChain::multi(unsigned n) {
  GraphChain c;
  for (unsigned i = 1; i <= n; ++i) {
    c.ys.push_back(Var::y(i));
    c.us.push_back(Var::u(i));
  }
  return c;
}

unsigned GraphChain::level_of(const Var& v) const {
  for (unsigned i = 0; i < ys.size(); ++i)
    if (ys[i] == v || us[i] == v) return i + 1;
  return 0;
}

std::vector<DiffPoly> graph_pair_images(const GraphChain& chain, const AffineMap& map) {
  std::vector<DiffPoly> out;
  out.reserve(chain.length() + 1);
  for (unsigned i = 0; i <= chain.length(); ++i) {
    out.push_back(relabel_x(affine_image(map.alpha, map.beta, chain.x, i), chain.x, [&](unsigned m) {
      return m == 0 ? DiffPoly::var(chain.x) : DiffPoly::var(chain.ys[m - 1]);
    }));
  }
  return out;
}

DiffPoly subst_graph_pair(const DiffPoly& f, const GraphChain& chain, const AffineMap& map) {
  if (map.alpha.is_zero()) throw HypothesisError("substitution with alpha = 0 is not a coordinate change");
  const std::vector<DiffPoly> y_images = graph_pair_images(chain, map);
  std::vector<DiffPoly> u_images;
  for (unsigned i = 1; i <= chain.length(); ++i) {
    u_images.push_back(relabel_x(affine_image(map.alpha, RationalFunction(), chain.x, i), chain.x, [&](unsigned m) {
      return m == 0 ? DiffPoly() : DiffPoly::var(chain.us[m - 1]);
    }));
  }
  return substitute(f, [&](const DerIndet& d) -> std::optional<DiffPoly> {
    if (d.var == chain.x) return affine_image(map.alpha, map.beta, chain.x, d.order);
    for (unsigned i = 0; i < chain.length(); ++i) {
      if (d.var == chain.ys[i]) return y_images[i + 1].derive(d.order);
      if (d.var == chain.us[i]) return u_images[i].derive(d.order);
    }
    return std::nullopt;
  });
}

DiffPoly collapse_to_graph(const DiffPoly& f, const GraphChain& chain) {
  return substitute(f, [&](const DerIndet& d) -> std::optional<DiffPoly> {
    for (unsigned i = 0; i < chain.length(); ++i) {
      if (d.var == chain.ys[i]) return DiffPoly::var(chain.x, d.order + i + 1);
      if (d.var == chain.us[i]) return DiffPoly();
    }
    return std::nullopt;
  });
}

DiffPoly to_u_coordinates(const DiffPoly& f, const GraphChain& chain) {
  return substitute(f, [&](const DerIndet& d) -> std::optional<DiffPoly> {
    for (unsigned i = 0; i < chain.length(); ++i)
      if (d.var == chain.ys[i]) return DiffPoly::var(chain.us[i], d.order) + DiffPoly::var(chain.x, d.order + i + 1);
    return std::nullopt;
  });
}

DiffPoly from_u_coordinates(const DiffPoly& f, const GraphChain& chain) {
  return substitute(f, [&](const DerIndet& d) -> std::optional<DiffPoly> {
    for (unsigned i = 0; i < chain.length(); ++i)
      if (d.var == chain.us[i]) return DiffPoly::var(chain.ys[i], d.order) - DiffPoly::var(chain.x, d.order + i + 1);
    return std::nullopt;
  });
}

RationalFunction eval_ratfun(const DiffPoly& f, const std::map<Var, RationalFunction>& assignment) {
  std::map<DerIndet, RationalFunction> values;
  auto value = [&](const DerIndet& d) -> const RationalFunction& {
    auto it = values.find(d);
    if (it != values.end()) return it->second;
    auto a = assignment.find(d.var);
    if (a == assignment.end()) throw HypothesisError("no value assigned to " + d.var.to_string());
    return values.emplace(d, nth_derivative(a->second, d.order)).first->second;
  };
  RationalFunction out;
  for (const auto& [m, c] : f.terms()) {
    RationalFunction term = c;
    for (const auto& [d, e] : m.factors()) term *= value(d).pow(e);
    out += term;
  }
  return out;
}

}  // namespace diffdef
