#include "diffdef/definability.hpp"

#include <algorithm>
#include <tuple>

#include "diffdef/errors.hpp"

namespace diffdef {

namespace {

constexpr unsigned kMaxRounds = 400;

UPoly lcm(const UPoly& a, const UPoly& b) { return (a * b).divmod(gcd(a, b)).first.monic(); }

bool mentions_chain_u(const Monomial& m, const GraphChain& chain) {
  for (const auto& [d, e] : m.factors())
    if (std::find(chain.us.begin(), chain.us.end(), d.var) != chain.us.end()) return true;
  return false;
}

bool is_terminal(const DiffPoly& g, const GraphChain& chain) {
  return g.size() == 1 && g.terms().begin()->first == Monomial(DerIndet{chain.u1(), 0});
}

std::size_t push(DerivationTrace& trace, TraceStep step) {
  trace.steps.push_back(std::move(step));
  return trace.steps.size();
}

}  // namespace

std::string to_string(Mode m) {
  switch (m) {
    case Mode::Explicit:
      return "explicit";
    case Mode::Curve:
      return "curve";
    case Mode::GeneralCurve:
      return "general-curve";
    case Mode::Multi:
      return "multi";
  }
  return {};
}

Mode mode_from_string(const std::string& s) {
  if (s == "explicit") return Mode::Explicit;
  if (s == "curve") return Mode::Curve;
  if (s == "general-curve") return Mode::GeneralCurve;
  if (s == "multi") return Mode::Multi;
  throw HypothesisError("unknown mode '" + s + "'");
}

std::size_t DerivationTrace::terminal_index() const {
  std::size_t t = 0;
  for (std::size_t k = 0; k < steps.size(); ++k)
    if (steps[k].kind != TraceStep::Kind::Witness) t = k + 1;
  return t;
}

Var DerivationTrace::target() const { return mode == Mode::Explicit ? Var::y() : chain.ys.front(); }

// ---------------------------------------------------------------- orders and scaling

int compare_weighted(const Monomial& a, const Monomial& b, const GraphChain& chain) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  using Key = std::tuple<unsigned, int, Var, unsigned>;
  auto key = [&](const DerIndet& d) -> Key {
    if (d.var == chain.x) return {d.order, 1, d.var, d.order};
    if (unsigned lvl = chain.level_of(d.var); lvl > 0) return {d.order + lvl, 0, d.var, d.order};
    return {d.order, 2, d.var, d.order};
  };
  auto sorted = [&](const Monomial& m) {
    std::vector<std::pair<Key, unsigned>> v;
    for (const auto& [d, e] : m.factors()) v.emplace_back(key(d), e);
    std::sort(v.begin(), v.end(), [](const auto& p, const auto& q) { return p.first > q.first; });
    return v;
  };
  const auto va = sorted(a);
  const auto vb = sorted(b);
  std::size_t i = 0;
  for (; i < va.size() && i < vb.size(); ++i) {
    if (va[i].first != vb[i].first) return va[i].first > vb[i].first ? 1 : -1;
    if (va[i].second != vb[i].second) return va[i].second > vb[i].second ? 1 : -1;
  }
  if (i < va.size()) return 1;
  if (i < vb.size()) return -1;
  return 0;
}

const Monomial& leading_monomial(const DiffPoly& g, const GraphChain& chain) {
  if (g.is_zero()) throw Error("leading monomial of zero");
  const Monomial* best = nullptr;
  for (const auto& [m, c] : g.terms())
    if (!best || compare_weighted(m, *best, chain) > 0) best = &m;
  return *best;
}

RationalFunction primitive_scale(const DiffPoly& p) {
  if (p.is_zero()) return RationalFunction(1);
  UPoly l(1);
  for (const auto& [m, c] : p.terms())
    if (!c.is_polynomial()) l = lcm(l, c.den());
  std::vector<UPoly> nums;
  UPoly g;
  for (const auto& [m, c] : p.terms()) {
    nums.push_back(c.num() * l.divmod(c.den()).first);
    g = gcd(g, nums.back());
  }
  Integer den_lcm(1);
  Integer num_gcd(0);
  std::vector<UPoly> reduced;
  for (const auto& n : nums) {
    reduced.push_back(n.divmod(g).first);
    for (const auto& q : reduced.back().coeffs()) {
      if (q == 0) continue;
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
    }
  }
  for (const auto& n : reduced)
    for (const auto& q : n.coeffs()) {
      if (q == 0) continue;
      Rational scaled = q * den_lcm;
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_num_mpz_t());
    }
  Rational k(den_lcm, num_gcd);
  k.canonicalize();
  if (reduced.back().lead() < 0) k = -k;
  return RationalFunction(l * k, g);
}

const std::vector<AffineMap>& fallback_maps() {
  static const std::vector<AffineMap> maps = [] {
    const RationalFunction t = RationalFunction::t();
    return std::vector<AffineMap>{
        {t, 0},
        {t + 1, 0},
        {t * t, 0},
        {t * 2, 0},
        {t * 3, 0},
        {1, t},
        {1, t * t},
        {1, t * t * t},
        {1, t * 2},
        {t, t},
    };
  }();
  return maps;
}

// ---------------------------------------------------------------- expansions and formulas

std::vector<Expansion> expansions(const DerivationTrace& trace) {
  std::vector<Expansion> ex(trace.item_count());
  ex[0].terms.emplace(AffineMap{}, RationalFunction(1));
  auto check_index = [&](std::size_t i, std::size_t idx) {
    if (i >= idx) throw Error("step " + std::to_string(idx - 1) + " refers to item " + std::to_string(i));
  };
  for (std::size_t k = 0; k < trace.steps.size(); ++k) {
    const TraceStep& s = trace.steps[k];
    const std::size_t idx = k + 1;
    Expansion& out = ex[idx];
    switch (s.kind) {
      case TraceStep::Kind::Substitute: {
        check_index(s.source, idx);
        if (s.map.alpha.is_zero()) throw Error("step " + std::to_string(k) + " has alpha = 0");
        const Expansion& in = ex[s.source];
        const RationalFunction scale = s.map.alpha.pow(in.u_power).inverse();
        for (const auto& [m, c] : in.terms) out.terms[compose(m, s.map)] += c * scale;
        out.u_power = in.u_power;
        break;
      }
      case TraceStep::Kind::Combine: {
        if (s.items.size() != s.coefficients.size() || s.items.empty())
          throw Error("step " + std::to_string(k) + " has mismatched coefficients");
        for (std::size_t i = 0; i < s.items.size(); ++i) {
          check_index(s.items[i], idx);
          const Expansion& in = ex[s.items[i]];
          if (i == 0) out.u_power = in.u_power;
          if (in.u_power != out.u_power) throw Error("step " + std::to_string(k) + " mixes powers of u1");
          for (const auto& [m, c] : in.terms) out.terms[m] += c * s.coefficients[i];
        }
        break;
      }
      case TraceStep::Kind::Divide:
        check_index(s.source, idx);
        out = ex[s.source];
        out.u_power += s.exponent;
        break;
      case TraceStep::Kind::Witness:
        break;
    }
    std::erase_if(out.terms, [](const auto& kv) { return kv.second.is_zero(); });
  }
  return ex;
}

namespace {

BuiltFormula explicit_formula(const DerivationTrace& trace, const Expansion& ex) {
  const Var x = trace.chain.x;
  const Var y = Var::y();
  const DiffPoly& g = trace.terminal();
  const Monomial dx(DerIndet{x, 1});
  const RationalFunction c = g.coeff(dx);
  const DiffPoly q = g - DiffPoly(dx, c);
  if (c.is_zero() || q.max_order() > 0 || q.variables().size() > 1 || (!q.variables().empty() && !q.variables().count(x)))
    throw Error("terminal item " + g.to_string() + " is not of the form c*x' + q(x)");
  const std::string& name = trace.relation.name;
  if (trace.terminal_index() == 0 && c.is_one() && q.is_zero())
    return {Formula::rel(name, {AlgTerm(DiffPoly::var(x)), AlgTerm(DiffPoly::var(y))}), {}};
  std::vector<Var> zs;
  std::vector<Formula> parts;
  Witnesses w;
  DiffPoly sum;
  unsigned j = 0;
  for (const auto& [m, coef] : ex.terms) {
    const Var z = Var::z(++j);
    zs.push_back(z);
    parts.push_back(Formula::rel(name, {AlgTerm(affine_image(m.alpha, m.beta, x, 0)), AlgTerm(DiffPoly::var(z))}));
    sum += DiffPoly::var(z) * coef;
    w.emplace(z, subst_affine(trace.input, x, m.alpha, m.beta));
  }
  parts.push_back(Formula::eq(AlgTerm(sum - DiffPoly::var(y) * c - q)));
  return {Formula::exists(std::move(zs), Formula::conj(std::move(parts))), std::move(w)};
}

BuiltFormula graph_formula(const DerivationTrace& trace, const Expansion& ex) {
  const GraphChain& chain = trace.chain;
  if (!is_terminal(trace.terminal(), chain))
    throw Error("terminal item " + trace.terminal().to_string() + " is not c*" + chain.u1().to_string());
  std::vector<Formula> atoms;
  for (const auto& [m, coef] : ex.terms) {
    std::vector<AlgTerm> args;
    for (auto& p : graph_pair_images(chain, m)) args.emplace_back(std::move(p));
    atoms.push_back(Formula::rel(trace.relation.name, std::move(args)));
  }
  Formula body = Formula::conj(std::move(atoms));
  if (chain.length() == 1) return {std::move(body), {}};
  std::vector<Var> bound(chain.ys.begin() + 1, chain.ys.end());
  Witnesses w;
  for (unsigned i = 2; i <= chain.length(); ++i) w.emplace(chain.ys[i - 1], DiffPoly::var(chain.x, i));
  return {Formula::exists(std::move(bound), std::move(body)), std::move(w)};
}

}  // namespace

BuiltFormula formula_from_trace(const DerivationTrace& trace) {
  const auto ex = expansions(trace);
  const Expansion& e = ex[trace.terminal_index()];
  if (trace.mode == Mode::Explicit) {
    if (e.u_power != 0) throw Error("explicit traces cannot divide");
    return explicit_formula(trace, e);
  }
  return graph_formula(trace, e);
}

bool contains_graph(const RelationSpec& spec, const GraphChain& chain) {
  for (const auto& f : spec.equations)
    if (!collapse_to_graph(f, chain).is_zero()) return false;
  return true;
}

// ---------------------------------------------------------------- explicit equations

Definition define_from_explicit(const DiffPoly& f) {
  const Var x = Var::x();
  for (const auto& v : f.variables())
    if (v != x) throw HypothesisError("explicit mode expects y = f(x) with f in x alone, found " + v.to_string());
  const auto n = f.order_of(x);
  if (!n || *n == 0) throw HypothesisError("explicit mode needs ord_x(f) >= 1");

  DerivationTrace trace;
  trace.mode = Mode::Explicit;
  trace.relation = RelationSpec{"E", {x, Var::y()}, {DiffPoly::var(Var::y()) - f}, std::nullopt};
  trace.input = f;

  DegreeVector target{std::vector<unsigned>(*n + 1, 0)};
  target.exps[1] = 1;
  std::size_t cur = 0;
  for (unsigned round = 0;; ++round) {
    if (round == kMaxRounds) throw StrategyExhausted("explicit reduction did not terminate");
    const DiffPoly g = trace.item(cur);
    const DegreeVector lead = n1_degree(g, x, *n);
    if (lead == target) break;
    unsigned d = 0;
    for (unsigned e : lead.exps) d += e;
    bool accepted = false;
    for (const AffineMap& m : fallback_maps()) {
      DiffPoly gs = subst_affine(g, x, m.alpha, m.beta);
      const RationalFunction ad = m.alpha.pow(d);
      DiffPoly h = gs - g * ad;
      if (h.is_zero()) continue;
      const DegreeVector lh = n1_degree(h, x, *n);
      if (!(lh < lead)) throw Error("internal: (n+1)-degree did not decrease at " + lead.to_string());
      if (h.total_degree() > g.total_degree()) throw Error("internal: total degree increased");
      if (std::all_of(lh.exps.begin() + 1, lh.exps.end(), [](unsigned e) { return e == 0; })) continue;
      const RationalFunction s = primitive_scale(h);
      const std::size_t sub = push(trace, {TraceStep::Kind::Substitute, cur, m, {}, {}, 0, {}, std::move(gs)});
      cur = push(trace, {TraceStep::Kind::Combine, 0, {}, {sub, cur}, {s, -(s * ad)}, 0, {}, h * s});
      accepted = true;
      break;
    }
    if (!accepted) throw StrategyExhausted("reduction degenerate at (n+1)-degree " + lead.to_string());
  }

  BuiltFormula built = formula_from_trace(trace);
  for (const auto& [z, w] : built.witnesses) push(trace, {TraceStep::Kind::Witness, 0, {}, {}, {}, 0, z, w});
  trace.formula = built.formula;
  return {built.formula, std::move(trace), std::move(built.witnesses)};
}

// ---------------------------------------------------------------- graph-containing relations

namespace {

Definition graph_loop(Mode mode, RelationSpec relation, const GraphChain& chain) {
  if (!contains_graph(relation, chain))
    throw HypothesisError("the relation does not contain the graph of D: f(x, Dx) is not identically zero");
  DerivationTrace trace;
  trace.mode = mode;
  trace.chain = chain;
  trace.input = to_u_coordinates(relation.equations.front(), chain);
  trace.relation = std::move(relation);
  if (trace.input.is_zero()) throw HypothesisError("the defining equation is identically zero");

  const DiffPoly u1 = DiffPoly::var(chain.u1());
  std::size_t cur = 0;
  for (unsigned round = 0;; ++round) {
    if (round == kMaxRounds) throw StrategyExhausted("curve reduction did not terminate");
    const DiffPoly g = trace.item(cur);
    if (is_terminal(g, chain)) break;

    unsigned m = ~0u;
    for (const auto& [mono, c] : g.terms()) m = std::min(m, mono.exponent(DerIndet{chain.u1(), 0}));
    bool divided = false;
    for (unsigned k = m; k > 0 && !divided; --k) {
      DiffPoly q = *g.divide_exact(u1.pow(k));
      if (!std::all_of(q.terms().begin(), q.terms().end(),
                       [&](const auto& kv) { return mentions_chain_u(kv.first, chain); }))
        continue;
      cur = push(trace, {TraceStep::Kind::Divide, cur, {}, {}, {}, k, {}, std::move(q)});
      divided = true;
    }
    if (divided) continue;

    const Monomial lead = leading_monomial(g, chain);
    bool accepted = false;
    for (const AffineMap& map : fallback_maps()) {
      DiffPoly gs = subst_graph_pair(g, chain, map);
      const RationalFunction ad = map.alpha.pow(lead.degree());
      DiffPoly h = g * ad - gs;
      if (h.is_zero()) continue;
      if (compare_weighted(leading_monomial(h, chain), lead, chain) >= 0)
        throw Error("internal: leading monomial did not decrease at " + lead.to_string());
      if (h.total_degree() > g.total_degree()) throw Error("internal: total degree increased");
      const RationalFunction s = primitive_scale(h);
      h *= s;
      if (!collapse_to_graph(h, chain).is_zero()) throw Error("internal: derived polynomial left the graph");
      const std::size_t sub = push(trace, {TraceStep::Kind::Substitute, cur, map, {}, {}, 0, {}, std::move(gs)});
      cur = push(trace, {TraceStep::Kind::Combine, 0, {}, {cur, sub}, {s * ad, -s}, 0, {}, std::move(h)});
      accepted = true;
      break;
    }
    if (!accepted) throw StrategyExhausted("no substitution reduces " + lead.to_string() + " in " + g.to_string());
  }

  BuiltFormula built = formula_from_trace(trace);
  for (const auto& [v, w] : built.witnesses) push(trace, {TraceStep::Kind::Witness, 0, {}, {}, {}, 0, v, w});
  trace.formula = built.formula;
  return {built.formula, std::move(trace), std::move(built.witnesses)};
}

unsigned chain_length_of(const DiffPoly& f) {
  unsigned n = 0;
  for (const auto& v : f.variables()) {
    if (v.role == Role::Target || v.role == Role::Difference) n = std::max(n, chain_level(v));
    else if (v.role != Role::Base) throw HypothesisError("unexpected variable " + v.to_string());
  }
  return n;
}

}  // namespace

Definition define_from_curve(const DiffPoly& f) {
  const GraphChain chain = GraphChain::single();
  for (const auto& v : f.variables())
    if (v != chain.x && v != chain.ys[0] && v != chain.us[0])
      throw HypothesisError("curve mode expects variables x, y (or u), found " + v.to_string());
  RelationSpec rel{"E", {chain.x, chain.ys[0]}, {from_u_coordinates(f, chain)}, std::nullopt};
  return graph_loop(Mode::Curve, std::move(rel), chain);
}

Definition define_from_general_curve(const DiffPoly& f, const Formula& side) {
  const GraphChain chain = GraphChain::single();
  for (const auto& v : side.free_variables())
    if (v != chain.x && v != chain.ys[0])
      throw HypothesisError("side condition may only mention x and y, found " + v.to_string());
  for (const auto& v : f.variables())
    if (v != chain.x && v != chain.ys[0] && v != chain.us[0])
      throw HypothesisError("curve mode expects variables x, y (or u), found " + v.to_string());
  RelationSpec rel{"E", {chain.x, chain.ys[0]}, {from_u_coordinates(f, chain)}, side};
  return graph_loop(Mode::GeneralCurve, std::move(rel), chain);
}

Definition define_from_multi(const DiffPoly& f, std::optional<unsigned> n) {
  const unsigned len = n.value_or(std::max(1u, chain_length_of(f)));
  if (len < chain_length_of(f)) throw HypothesisError("chain length smaller than the variables used");
  const GraphChain chain = GraphChain::multi(len);
  for (const auto& v : f.variables())
    if (v != chain.x && chain.level_of(v) == 0)
      throw HypothesisError("multi mode expects x, y1..yn or u1..un, found " + v.to_string());
  std::vector<Var> slots{chain.x};
  slots.insert(slots.end(), chain.ys.begin(), chain.ys.end());
  RelationSpec rel{"E", std::move(slots), {from_u_coordinates(f, chain)}, std::nullopt};
  return graph_loop(Mode::Multi, std::move(rel), chain);
}

BuiltFormula chain_formula(const Definition& multi, unsigned i) {
  if (multi.trace.mode != Mode::Multi) throw HypothesisError("chaining needs a multi-mode definition");
  if (i == 0) throw HypothesisError("chain level must be positive");
  const GraphChain& chain = multi.trace.chain;
  if (i == 1) return {multi.formula, multi.witnesses};
  Formula body = multi.formula;
  std::vector<Var> bound;
  if (body.kind() == Formula::Kind::Exists) {
    bound = body.vars();
    body = body.children().front();
  }
  // w_0 = x, w_j = z_j, w_i = y_i
  auto w = [&](unsigned j) { return j == 0 ? chain.x : j == i ? Var::y(i) : Var::z(j); };
  std::vector<Var> quantified;
  Witnesses witnesses;
  for (unsigned j = 1; j < i; ++j) {
    quantified.push_back(Var::z(j));
    witnesses.emplace(Var::z(j), DiffPoly::var(chain.x, j));
  }
  unsigned fresh = i;
  std::vector<Formula> copies;
  for (unsigned j = 1; j <= i; ++j) {
    std::map<Var, DiffPoly> ren{{chain.x, DiffPoly::var(w(j - 1))}, {chain.ys[0], DiffPoly::var(w(j))}};
    for (const auto& b : bound) {
      const Var z = Var::z(fresh++);
      ren.emplace(b, DiffPoly::var(z));
      quantified.push_back(z);
      witnesses.emplace(z, DiffPoly::var(chain.x, chain_level(b) + j - 1));
    }
    copies.push_back(body.substitute(ren));
  }
  return {Formula::exists(std::move(quantified), Formula::conj(std::move(copies))), std::move(witnesses)};
}

}  // namespace diffdef
