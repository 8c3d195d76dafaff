#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "diffdef/algebraic.hpp"
#include "diffdef/definability.hpp"
#include "diffdef/demo.hpp"
#include "diffdef/errors.hpp"
#include "diffdef/parse.hpp"
#include "diffdef/trace_io.hpp"
#include "diffdef/verify.hpp"
#include "diffdef/witness.hpp"

using namespace diffdef;
using json = nlohmann::json;

namespace {

constexpr const char* kCliSchema = "diffdef.cli/1";

enum Exit { kOk = 0, kFalse = 1, kUsage = 2, kExhausted = 3 };

struct Options {
  bool json = false;
  std::uint64_t seed = 1;
  unsigned truncation = 12;
  unsigned samples = 100;
  bool unsafe = false;
  std::string trace_out;
  std::string file;
  std::string input;

  std::string mode;
  std::string side;
  unsigned chain = 0;
  std::string guard;
  std::string params;
  std::string factor;
  std::vector<std::string> relation;
  std::vector<std::string> witness;
  std::string trace;
  std::string golden = DIFFDEF_DEFAULT_GOLDEN;

  ModelConfig config() const {
    ModelConfig c;
    c.seed = seed;
    c.truncation = truncation;
    return c;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw HypothesisError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Equations from the inline argument or from --file (one per line, '#' comments).
std::vector<std::string> equations(const Options& o) {
  if (o.input.empty() == o.file.empty()) throw HypothesisError("give exactly one of an inline equation or --file");
  if (!o.file.empty()) {
    std::vector<std::string> out;
    std::istringstream in(read_file(o.file));
    std::string line;
    while (std::getline(in, line)) {
      if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
      if (line.find_first_not_of(" \t\r") != std::string::npos) out.push_back(line);
    }
    if (out.empty()) throw HypothesisError(o.file + " contains no equation");
    return out;
  }
  return {o.input};
}

std::string single_equation(const Options& o) {
  auto eqs = equations(o);
  if (eqs.size() != 1) throw HypothesisError("expected a single equation");
  return eqs.front();
}

unsigned chain_length(const std::vector<DiffPoly>& eqs) {
  unsigned n = 0;
  for (const auto& e : eqs)
    for (const auto& v : e.variables())
      if ((v.role == Role::Target || v.role == Role::Difference) && v.index > 0) n = std::max(n, v.index);
  return n;
}

GraphChain chain_for(unsigned n) { return n == 0 ? GraphChain::single() : GraphChain::multi(n); }

void emit(const Options& o, const json& j, const std::string& text) {
  if (o.json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

json witnesses_json(const Witnesses& w) {
  json j = json::object();
  for (const auto& [v, p] : w) j[v.to_string()] = p.to_string();
  return j;
}

std::string witnesses_text(const Witnesses& w) {
  std::string out;
  for (const auto& [v, p] : w) out += "  " + v.to_string() + " := " + p.to_string() + "\n";
  return out.empty() ? out : "witnesses:\n" + out;
}

int cmd_contains_graph(const Options& o) {
  std::vector<DiffPoly> eqs;
  for (const auto& e : equations(o)) eqs.push_back(parse_equation(e));
  const unsigned n = o.chain ? o.chain : chain_length(eqs);
  const GraphChain chain = chain_for(n);
  std::vector<Var> slots{chain.x};
  slots.insert(slots.end(), chain.ys.begin(), chain.ys.end());
  const bool result = contains_graph({"E", slots, eqs, std::nullopt}, chain);
  emit(o, {{"schema", kCliSchema}, {"command", "contains-graph"}, {"contains_graph", result}},
       result ? "true\n" : "false\n");
  return result ? kOk : kFalse;
}

int cmd_define(const Options& o) {
  const Mode mode = mode_from_string(o.mode);
  const std::string text = single_equation(o);
  Definition def;
  switch (mode) {
    case Mode::Explicit:
      def = define_from_explicit(DiffPoly::var(Var::y()) - parse_equation(text));
      break;
    case Mode::Curve:
      def = define_from_curve(parse_equation(text));
      break;
    case Mode::GeneralCurve:
      if (o.side.empty()) throw HypothesisError("general-curve mode needs --side");
      def = define_from_general_curve(parse_equation(text), parse_formula(o.side));
      break;
    case Mode::Multi:
      def = define_from_multi(parse_equation(text), o.chain ? std::optional<unsigned>(o.chain) : std::nullopt);
      break;
  }
  const VerificationReport report = verify_trace(def.trace, o.config(), o.samples);
  if (!o.trace_out.empty()) {
    std::ofstream out(o.trace_out);
    if (!out) throw HypothesisError("cannot write " + o.trace_out);
    out << trace_to_json(def.trace).dump(2) << "\n";
  }
  const bool verified = report.verdict == Verdict::Verified;
  if (!verified && !o.unsafe) {
    std::cerr << "refusing to print an unverified formula (pass --unsafe to override)\n" << report.summary();
    return kFalse;
  }
  json j{{"schema", kCliSchema},
         {"command", "define"},
         {"mode", to_string(mode)},
         {"formula", def.formula.to_string()},
         {"formula_ast", def.formula.to_json()},
         {"witnesses", witnesses_json(def.witnesses)},
         {"report", report.to_json()}};
  emit(o, j, def.formula.to_string() + "\n" + witnesses_text(def.witnesses) + report.summary());
  return verified ? kOk : kFalse;
}

int cmd_witness(const Options& o) {
  const NonzeroWitness w = nonzero_witness(parse_poly(single_equation(o)));
  json values = json::object();
  std::string text;
  for (const auto& [v, p] : w.values) {
    values[v.to_string()] = p.to_string();
    text += v.to_string() + " = " + p.to_string() + "\n";
  }
  text += "value = " + w.value.to_string() + "\n";
  emit(o,
       {{"schema", kCliSchema},
        {"command", "witness"},
        {"values", values},
        {"value", w.value.to_string()},
        {"height", w.height.get_str()}},
       text);
  return kOk;
}

int cmd_deparametrize(const Options& o) {
  GuardedFormula gf{parse_formula(single_equation(o)), parse_poly(o.guard), {}};
  std::istringstream ps(o.params);
  std::string p;
  while (std::getline(ps, p, ','))
    if (!p.empty()) gf.params.push_back(parse_var(p));
  const Deparametrized d = deparametrize(gf);
  json values = json::object();
  std::string text = d.formula.to_string() + "\n";
  for (const auto& [v, poly] : d.values) {
    values[v.to_string()] = poly.to_string();
    text += "  " + v.to_string() + " = " + poly.to_string() + "\n";
  }
  emit(o,
       {{"schema", kCliSchema},
        {"command", "deparametrize"},
        {"formula", d.formula.to_string()},
        {"formula_ast", d.formula.to_json()},
        {"values", values}},
       text);
  return kOk;
}

int cmd_algebraic_front(const Options& o) {
  if (o.factor.empty()) throw HypothesisError("algebraic-front needs --factor");
  const AlgebraicFront front = algebraic_front(parse_equation(single_equation(o)), parse_poly(o.factor));
  const AlgebraicReport report = algebraic_report(front, o.config(), o.samples);
  std::string text = front.formula.to_string() + "\nresultant: " + front.resultant.to_string() +
                     "\nvanishes on graph: " + (report.resultant_vanishes_on_graph ? "yes" : "no") +
                     "\noff-graph samples: " + std::to_string(report.samples) + ", " +
                     std::to_string(report.negative_failures) + " failures, " +
                     std::to_string(report.inconclusive) + " inconclusive\n";
  emit(o,
       {{"schema", kCliSchema},
        {"command", "algebraic-front"},
        {"formula", front.formula.to_string()},
        {"formula_ast", front.formula.to_json()},
        {"order", front.order},
        {"resultant", front.resultant.to_string()},
        {"report", report.to_json()}},
       text);
  return report.passed() ? kOk : kFalse;
}

int cmd_d_formula(const Options& o) {
  const Formula phi = parse_formula(single_equation(o));
  if (o.relation.empty()) throw HypothesisError("d-formula needs at least one --relation");
  std::vector<DiffPoly> eqs;
  for (const auto& r : o.relation) eqs.push_back(parse_equation(r));
  const GraphChain chain = chain_for(o.chain);
  std::vector<Var> slots{chain.x};
  slots.insert(slots.end(), chain.ys.begin(), chain.ys.end());
  for (auto& e : eqs) e = from_u_coordinates(e, chain);
  RelationSpec rel{"E", slots, eqs, std::nullopt};
  if (!o.side.empty()) rel.side = parse_formula(o.side);
  Witnesses w;
  for (const auto& item : o.witness) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw HypothesisError("expected --witness var=expression");
    w.emplace(parse_var(item.substr(0, eq)), parse_poly(item.substr(eq + 1)));
  }
  const SemanticReport r = is_d_formula(phi, {{"E", rel}}, w, o.config(), o.samples, chain.x, chain.ys.front());
  std::string text = "samples " + std::to_string(r.samples) + ": " + std::to_string(r.positive_failures) +
                     " graph failures, " + std::to_string(r.negative_failures) + " off-graph failures, " +
                     std::to_string(r.inconclusive) + " inconclusive\nverdict: " + to_string(r.verdict()) + "\n";
  emit(o, {{"schema", kCliSchema}, {"command", "d-formula"}, {"report", r.to_json()}}, text);
  return r.verdict() == Verdict::Verified ? kOk : kFalse;
}

int cmd_verify(const Options& o) {
  const DerivationTrace trace = trace_from_json(json::parse(read_file(o.trace)));
  const VerificationReport report = verify_trace(trace, o.config(), o.samples);
  emit(o, {{"schema", kCliSchema}, {"command", "verify"}, {"report", report.to_json()}}, report.summary());
  return report.verdict == Verdict::Verified ? kOk : kFalse;
}

int cmd_demo(const Options& o) {
  std::istringstream in(read_file(o.golden));
  const DemoTranscript t = run_demo(read_golden(in), o.config(), o.samples);
  emit(o, t.to_json(), t.to_text());
  return t.ok() ? kOk : kFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Definability of the derivation in differential fields: formulas, traces and checks"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "machine-readable output");
  app.add_option("--seed", o.seed, "sampling seed");
  app.add_option("--truncation", o.truncation, "series truncation order N")->check(CLI::Range(2u, 200u));
  app.add_option("--samples", o.samples, "number of semantic samples K");
  app.add_flag("--unsafe", o.unsafe, "print formulas even if verification fails");
  app.add_option("--trace-out", o.trace_out, "write the derivation trace as JSON");
  app.add_option("--file", o.file, "read equations from a file, one per line")->check(CLI::ExistingFile);

  auto input = [&](CLI::App* sub, const std::string& what) { sub->add_option("input", o.input, what); };

  auto* contains = app.add_subcommand("contains-graph", "does the relation contain the graph of D?");
  input(contains, "equation");
  contains->add_option("--chain", o.chain, "length of the y-chain");

  auto* define = app.add_subcommand("define", "define y = Dx from a relation");
  input(define, "equation");
  define->add_option("--mode", o.mode, "explicit | curve | general-curve | multi")
      ->required()
      ->check(CLI::IsMember({"explicit", "curve", "general-curve", "multi"}));
  define->add_option("--side", o.side, "side formula for general-curve mode");
  define->add_option("--chain", o.chain, "chain length for multi mode");

  auto* witness = app.add_subcommand("witness", "find polynomials in t on which f does not vanish");
  input(witness, "differential polynomial");

  auto* deparam = app.add_subcommand("deparametrize", "replace parameter slots by a nonzero witness of the guard");
  input(deparam, "formula");
  deparam->add_option("--guard", o.guard, "guard polynomial")->required();
  deparam->add_option("--params", o.params, "comma separated parameter variables")->required();

  auto* alg = app.add_subcommand("algebraic-front", "existential formula from a factor of f(x, y)");
  input(alg, "equation f(x, y) = 0");
  alg->add_option("--factor", o.factor, "factor p of f")->required();

  auto* dformula = app.add_subcommand("d-formula", "sample whether a formula defines y = Dx");
  input(dformula, "formula");
  dformula->add_option("--relation", o.relation, "defining equation of E (repeatable)")->required();
  dformula->add_option("--side", o.side, "side formula of E");
  dformula->add_option("--witness", o.witness, "value of a quantified variable, var=expression (repeatable)");
  dformula->add_option("--chain", o.chain, "arity of E minus one, when E has slots x, y1 ... yn");

  auto* verify = app.add_subcommand("verify", "replay and check a stored derivation trace");
  verify->add_option("--trace", o.trace, "trace file")->required()->check(CLI::ExistingFile);

  auto* demo = app.add_subcommand("demo", "run the worked examples against the golden file");
  demo->add_option("--golden", o.golden, "golden file")->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*contains) return cmd_contains_graph(o);
    if (*define) return cmd_define(o);
    if (*witness) return cmd_witness(o);
    if (*deparam) return cmd_deparametrize(o);
    if (*alg) return cmd_algebraic_front(o);
    if (*dformula) return cmd_d_formula(o);
    if (*verify) return cmd_verify(o);
    if (*demo) return cmd_demo(o);
  } catch (const StrategyExhausted& e) {
    std::cerr << "strategy exhausted: " << e.what() << "\n";
    return kExhausted;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const Inconclusive& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return kFalse;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
