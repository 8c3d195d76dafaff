#include "diffdef/algebraic.hpp"

#include "diffdef/substitution.hpp"

namespace diffdef {

std::vector<DiffPoly> coefficients_in(const DiffPoly& f, const Var& v) {
  std::vector<DiffPoly> out;
  const DerIndet d{v, 0};
  for (const auto& [m, c] : f.terms()) {
    for (const auto& [fd, e] : m.factors())
      if (fd.var == v && fd.order > 0) throw HypothesisError(v.to_string() + " occurs with a derivative");
    const unsigned e = m.exponent(d);
    if (out.size() <= e) out.resize(e + 1);
    Monomial rest = e == 0 ? m : *m.divide(Monomial(d, e));
    out[e] += DiffPoly(rest, c);
  }
  return out;
}

bool is_separable(const DiffPoly& f, const Var& y) {
  const DiffPoly* first = nullptr;
  RationalFunction first_lc;
  for (const auto& a : coefficients_in(f, y)) {
    if (a.is_zero()) continue;
    const RationalFunction lc = a.terms().rbegin()->second;
    if (!first) {
      first = &a;
      first_lc = lc;
      continue;
    }
    if (a * first_lc != *first * lc) return false;
  }
  return true;
}

DiffPoly resultant(const DiffPoly& a, const DiffPoly& b, const Var& v) {
  const auto ca = coefficients_in(a, v);
  const auto cb = coefficients_in(b, v);
  if (ca.empty() || cb.empty()) return DiffPoly();
  const std::size_t m = ca.size() - 1;
  const std::size_t n = cb.size() - 1;
  const std::size_t k = m + n;
  if (k == 0) return DiffPoly(1);
  // Sylvester matrix: n shifted rows of a, m shifted rows of b, highest power first
  std::vector<std::vector<DiffPoly>> s(k, std::vector<DiffPoly>(k));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= m; ++j) s[i][i + j] = ca[m - j];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= n; ++j) s[n + i][i + j] = cb[n - j];

  // fraction-free Bareiss elimination
  bool negate = false;
  DiffPoly prev(1);
  for (std::size_t c = 0; c + 1 < k; ++c) {
    if (s[c][c].is_zero()) {
      std::size_t r = c + 1;
      while (r < k && s[r][c].is_zero()) ++r;
      if (r == k) return DiffPoly();
      std::swap(s[c], s[r]);
      negate = !negate;
    }
    for (std::size_t i = c + 1; i < k; ++i) {
      for (std::size_t j = c + 1; j < k; ++j) {
        DiffPoly num = s[i][j] * s[c][c] - s[i][c] * s[c][j];
        auto q = num.divide_exact(prev);
        if (!q) throw Error("internal: inexact Bareiss step");
        s[i][j] = std::move(*q);
      }
      s[i][c] = DiffPoly();
    }
    prev = s[c][c];
  }
  return negate ? -s[k - 1][k - 1] : s[k - 1][k - 1];
}

AlgebraicFront algebraic_front(const DiffPoly& f, const DiffPoly& p) {
  const Var x = Var::x();
  const Var y = Var::y();
  for (const auto& v : f.variables())
    if (v != x && v != y) throw HypothesisError("expected f(x, y), found " + v.to_string());
  const auto oy = f.order_of(y);
  if (!oy) throw HypothesisError("f does not mention y");
  if (*oy != 0) throw HypothesisError("ord_y(f) must be 0");
  const auto ox = f.order_of(x);
  if (!ox || *ox == 0) throw HypothesisError("ord_x(f) must be positive");
  if (is_separable(f, y)) throw HypothesisError("f is trivial: it splits as g(x) * h(y)");
  if (p.is_zero() || !f.divide_exact(p)) throw HypothesisError("the factor does not divide f");
  if (!p.order_of(y) || p.order_of(x).value_or(0) == 0)
    throw HypothesisError("the factor must depend on y and on a derivative of x");

  const unsigned n = *ox;
  const Var z = Var::z();
  DiffPoly lifted = substitute(p, [&](const DerIndet& d) -> std::optional<DiffPoly> {
    if (d.var == y) return DiffPoly::var(z);
    if (d.var == x && d.order > 0) return DiffPoly::var(Var::y(d.order));
    return std::nullopt;
  });
  DiffPoly fz = substitute(f, [&](const DerIndet& d) -> std::optional<DiffPoly> {
    if (d.var == y) return DiffPoly::var(z);
    return std::nullopt;
  });

  RelationSpec rel{"E", {x, y}, {f}, std::nullopt};
  Formula phi = Formula::exists(
      {z}, Formula::conj({Formula::rel("E", {AlgTerm(DiffPoly::var(x)), AlgTerm(DiffPoly::var(z))}),
                          Formula::eq(AlgTerm(lifted))}));
  return {std::move(phi), std::move(rel), n, lifted, resultant(fz, lifted, z)};
}

}  // namespace diffdef
