#include "diffdef/verify.hpp"

#include <exception>

#include <omp.h>

#include "diffdef/errors.hpp"

namespace diffdef {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Verified:
      return "verified";
    case Verdict::Refuted:
      return "refuted";
    case Verdict::Inconclusive:
      return "inconclusive";
  }
  return {};
}

Verdict SemanticReport::verdict() const {
  if (positive_failures > 0 || negative_failures > 0) return Verdict::Refuted;
  if (inconclusive > 0) return Verdict::Inconclusive;
  return Verdict::Verified;
}

nlohmann::json SemanticReport::to_json() const {
  nlohmann::json j;
  j["samples"] = samples;
  j["positive_failures"] = positive_failures;
  j["negative_failures"] = negative_failures;
  j["inconclusive"] = inconclusive;
  j["first_failure"] = first_failure ? nlohmann::json(*first_failure) : nlohmann::json();
  j["seed"] = seed;
  j["truncation"] = truncation;
  j["t_offset"] = t_offset.get_str();
  j["false_positive_bound"] = false_positive_bound;
  j["verdict"] = to_string(verdict());
  return j;
}

namespace {

void collect_polys(const Formula& phi, std::vector<DiffPoly>& out) {
  for (const auto& a : phi.args()) out.push_back(a.poly());
  for (const auto& c : phi.children()) collect_polys(c, out);
}

struct Prepared {
  ModelConfig cfg;
  unsigned degree = 1;
};

Prepared prepare(const Formula& phi, const Relations& relations, const Witnesses& witnesses, const ModelConfig& cfg) {
  std::vector<DiffPoly> polys;
  collect_polys(phi, polys);
  for (const auto& [name, spec] : relations) {
    polys.insert(polys.end(), spec.equations.begin(), spec.equations.end());
    if (spec.side) collect_polys(*spec.side, polys);
  }
  for (const auto& [v, w] : witnesses) polys.push_back(w);
  Prepared p{cfg, 1};
  p.cfg.t_offset = pole_free_offset(polys, cfg);
  for (const auto& q : polys) p.degree = std::max(p.degree, q.total_degree());
  return p;
}

enum class Outcome { Pass, PositiveFail, NegativeFail, Inconclusive };

Outcome run_sample(const Formula& phi, const Relations& relations, const Witnesses& witnesses, const Var& x,
                   const Var& target, const ModelConfig& cfg, unsigned k) {
  std::mt19937_64 rng(sample_seed(cfg.seed, k));
  const SeriesModel model{cfg};
  const TruncSeries a = random_generic(cfg, rng);
  const TruncSeries da = a.derivative();
  TruncSeries b = random_generic(cfg, rng);
  while (b.equals_upto(da)) b = random_generic(cfg, rng);
  try {
    if (!eval_formula(phi, model, {{x, a}, {target, da}}, relations, witnesses)) return Outcome::PositiveFail;
    if (eval_formula(phi, model, {{x, a}, {target, b}}, relations, witnesses)) return Outcome::NegativeFail;
  } catch (const Inconclusive&) {
    return Outcome::Inconclusive;
  }
  return Outcome::Pass;
}

SemanticReport blank_report(const Prepared& p, unsigned samples) {
  SemanticReport r;
  r.samples = samples;
  r.seed = p.cfg.seed;
  r.truncation = p.cfg.truncation;
  r.t_offset = p.cfg.t_offset;
  const double b = p.cfg.coeff_bound;
  r.false_positive_bound = p.degree / ((2 * b + 1) * b);
  return r;
}

void tally(SemanticReport& r, Outcome o, unsigned k) {
  switch (o) {
    case Outcome::Pass:
      return;
    case Outcome::PositiveFail:
      ++r.positive_failures;
      break;
    case Outcome::NegativeFail:
      ++r.negative_failures;
      break;
    case Outcome::Inconclusive:
      ++r.inconclusive;
      break;
  }
  if (o != Outcome::Inconclusive && (!r.first_failure || k < *r.first_failure)) r.first_failure = k;
}

}  // namespace

SemanticReport semantic_check_serial(const Formula& phi, const Relations& relations, const Witnesses& witnesses,
                                     const Var& x, const Var& target, const ModelConfig& cfg, unsigned samples) {
  const Prepared p = prepare(phi, relations, witnesses, cfg);
  SemanticReport r = blank_report(p, samples);
  for (unsigned k = 0; k < samples; ++k) tally(r, run_sample(phi, relations, witnesses, x, target, p.cfg, k), k);
  return r;
}

SemanticReport semantic_check(const Formula& phi, const Relations& relations, const Witnesses& witnesses,
                              const Var& x, const Var& target, const ModelConfig& cfg, unsigned samples) {
  const Prepared p = prepare(phi, relations, witnesses, cfg);
  std::vector<Outcome> outcomes(samples, Outcome::Pass);
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < static_cast<long>(samples); ++k) {
    try {
      outcomes[k] = run_sample(phi, relations, witnesses, x, target, p.cfg, static_cast<unsigned>(k));
    } catch (...) {
#pragma omp critical(diffdef_semantic_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  SemanticReport r = blank_report(p, samples);
  for (unsigned k = 0; k < samples; ++k) tally(r, outcomes[k], k);
  return r;
}

// ---------------------------------------------------------------- replay

namespace {

bool is_c_times(const DiffPoly& g, const Var& v) {
  return g.size() == 1 && g.terms().begin()->first == Monomial(DerIndet{v, 0});
}

bool is_explicit_terminal(const DiffPoly& g, const Var& x) {
  const Monomial dx(DerIndet{x, 1});
  const RationalFunction c = g.coeff(dx);
  if (c.is_zero()) return false;
  const DiffPoly q = g - DiffPoly(dx, c);
  for (const auto& v : q.variables())
    if (v != x) return false;
  return q.max_order() == 0;
}

}  // namespace

VerificationReport replay_trace(const DerivationTrace& trace) {
  VerificationReport r;
  const bool expl = trace.mode == Mode::Explicit;
  const GraphChain& chain = trace.chain;
  auto diverge = [&](std::size_t k, const std::string& msg) {
    if (r.first_divergence) return;
    r.first_divergence = k;
    r.replay_message = "step " + std::to_string(k) + ": " + msg;
  };

  bool input_ok = false;
  if (trace.relation.equations.size() == 1) {
    const DiffPoly& eq = trace.relation.equations.front();
    input_ok = expl ? eq == DiffPoly::var(Var::y()) - trace.input : trace.input == to_u_coordinates(eq, chain);
  }
  if (!input_ok) r.replay_message = "input does not match the relation";

  r.graph_ok = true;
  for (std::size_t k = 0; k < trace.steps.size(); ++k) {
    const TraceStep& s = trace.steps[k];
    const std::size_t idx = k + 1;
    try {
      switch (s.kind) {
        case TraceStep::Kind::Substitute: {
          if (s.source >= idx) throw Error("source out of range");
          const DiffPoly& in = trace.item(s.source);
          DiffPoly re = expl ? subst_affine(in, chain.x, s.map.alpha, s.map.beta) : subst_graph_pair(in, chain, s.map);
          if (re != s.result) diverge(k, "substitution result differs");
          break;
        }
        case TraceStep::Kind::Combine: {
          if (s.items.empty() || s.items.size() != s.coefficients.size()) throw Error("malformed combination");
          DiffPoly sum;
          for (std::size_t i = 0; i < s.items.size(); ++i) {
            if (s.items[i] >= idx) throw Error("item out of range");
            sum += trace.item(s.items[i]) * s.coefficients[i];
          }
          if (sum != s.result) diverge(k, "combination result differs");
          break;
        }
        case TraceStep::Kind::Divide: {
          if (s.source >= idx || s.exponent == 0 || expl) throw Error("malformed division");
          if (s.result * DiffPoly::var(chain.u1()).pow(s.exponent) != trace.item(s.source))
            diverge(k, "division result differs");
          break;
        }
        case TraceStep::Kind::Witness:
          break;
      }
    } catch (const Error& e) {
      diverge(k, e.what());
    }
    if (!expl && s.kind != TraceStep::Kind::Witness && r.graph_ok && !collapse_to_graph(s.result, chain).is_zero()) {
      r.graph_ok = false;
      diverge(k, "result does not vanish on the graph");
    }
  }
  r.replay_ok = input_ok && !r.first_divergence;

  const DiffPoly& g = trace.terminal();
  r.terminal = g.to_string();
  if (expl) {
    r.terminal_ok = is_explicit_terminal(g, chain.x);
    r.terminal_class = r.terminal_ok ? "c*x' + q(x)" : "other";
  } else {
    r.terminal_ok = is_c_times(g, chain.u1());
    r.terminal_class = r.terminal_ok ? "c*" + chain.u1().to_string() : "other";
  }

  try {
    const auto ex = expansions(trace);
    const Expansion& e = ex[trace.terminal_index()];
    DiffPoly rhs;
    for (const auto& [m, c] : e.terms)
      rhs += (expl ? subst_affine(trace.input, chain.x, m.alpha, m.beta) : subst_graph_pair(trace.input, chain, m)) * c;
    r.identity_ok = g * DiffPoly::var(chain.u1()).pow(e.u_power) == rhs;
  } catch (const Error&) {
    r.identity_ok = false;
  }

  try {
    const BuiltFormula built = formula_from_trace(trace);
    Witnesses stored;
    for (const auto& s : trace.steps)
      if (s.kind == TraceStep::Kind::Witness) stored.emplace(s.var, s.result);
    r.formula_ok = built.formula == trace.formula && built.witnesses == stored;
  } catch (const Error&) {
    r.formula_ok = false;
  }

  r.verdict = r.symbolic_ok() ? Verdict::Verified : Verdict::Refuted;
  return r;
}

VerificationReport verify_trace(const DerivationTrace& trace, const ModelConfig& cfg, unsigned samples) {
  VerificationReport r = replay_trace(trace);
  if (!r.symbolic_ok() || samples == 0) return r;
  Witnesses w;
  for (const auto& s : trace.steps)
    if (s.kind == TraceStep::Kind::Witness) w.emplace(s.var, s.result);
  r.semantic = semantic_check(trace.formula, {{trace.relation.name, trace.relation}}, w, trace.chain.x,
                              trace.target(), cfg, samples);
  r.verdict = r.semantic->verdict();
  return r;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j;
  j["trace_replay"] = {{"pass", replay_ok},
                       {"first_divergence", first_divergence ? nlohmann::json(*first_divergence) : nlohmann::json()},
                       {"message", replay_message}};
  j["graph_preservation"] = graph_ok;
  j["expansion_identity"] = identity_ok;
  j["formula_consistency"] = formula_ok;
  j["terminal_certificate"] = {{"polynomial", terminal}, {"class", terminal_class}, {"pass", terminal_ok}};
  j["semantic"] = semantic ? semantic->to_json() : nlohmann::json();
  j["verdict"] = to_string(verdict);
  return j;
}

std::string VerificationReport::summary() const {
  auto mark = [](bool b) { return b ? "pass" : "FAIL"; };
  std::string out;
  out += "trace replay:        " + std::string(mark(replay_ok));
  if (!replay_message.empty()) out += " (" + replay_message + ")";
  out += "\ngraph preservation:  " + std::string(mark(graph_ok));
  out += "\nexpansion identity:  " + std::string(mark(identity_ok));
  out += "\nformula consistency: " + std::string(mark(formula_ok));
  out += "\nterminal:            " + terminal + " [" + terminal_class + "]";
  if (semantic) {
    const SemanticReport& s = *semantic;
    out += "\nsemantic:            " + std::to_string(s.samples) + " samples, " +
           std::to_string(s.positive_failures) + " graph failures, " + std::to_string(s.negative_failures) +
           " off-graph failures, " + std::to_string(s.inconclusive) + " inconclusive (N = " +
           std::to_string(s.truncation) + ", seed " + std::to_string(s.seed) + ", t = " + s.t_offset.get_str() +
           " + s, false-positive bound " + std::to_string(s.false_positive_bound) + " per sample)";
  }
  out += "\nverdict:             " + to_string(verdict) + "\n";
  return out;
}

// ---------------------------------------------------------------- algebraic front

nlohmann::json AlgebraicReport::to_json() const {
  return {{"resultant_vanishes_on_graph", resultant_vanishes_on_graph},
          {"resultant_nonzero", resultant_nonzero},
          {"samples", samples},
          {"negative_failures", negative_failures},
          {"inconclusive", inconclusive},
          {"pass", passed()}};
}

AlgebraicReport algebraic_report(const AlgebraicFront& front, const ModelConfig& cfg, unsigned samples) {
  AlgebraicReport r;
  const GraphChain chain = GraphChain::multi(front.order);
  r.resultant_vanishes_on_graph = collapse_to_graph(front.resultant, chain).is_zero();
  r.resultant_nonzero = !front.resultant.is_zero();
  r.samples = samples;
  if (!r.resultant_nonzero) return r;
  ModelConfig c = cfg;
  c.t_offset = pole_free_offset({front.resultant}, cfg);
  for (unsigned k = 0; k < samples; ++k) {
    std::mt19937_64 rng(sample_seed(c.seed, k));
    std::map<Var, TruncSeries> at{{chain.x, random_generic(c, rng)}};
    for (const auto& y : chain.ys) at.emplace(y, random_generic(c, rng));
    try {
      if (eval_diffpoly_series(front.resultant, at, c).is_zero()) ++r.negative_failures;
    } catch (const Inconclusive&) {
      ++r.inconclusive;
    }
  }
  return r;
}

}  // namespace diffdef
