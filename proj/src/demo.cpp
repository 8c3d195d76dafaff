#include "diffdef/demo.hpp"

#include <sstream>

#include "diffdef/definability.hpp"
#include "diffdef/errors.hpp"
#include "diffdef/parse.hpp"
#include "diffdef/verify.hpp"

namespace diffdef {

Golden read_golden(std::istream& in) {
  Golden g;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto colon = line.find(':');
    if (colon == std::string::npos) {
      if (line.find_first_not_of(" \t\r") != std::string::npos) throw ParseError("expected 'key: polynomial'", 0);
      continue;
    }
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      if (b == std::string::npos) return std::string();
      return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
    };
    g[trim(line.substr(0, colon))] = trim(line.substr(colon + 1));
  }
  return g;
}

bool proportional(const DiffPoly& a, const DiffPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a * b.terms().rbegin()->second == b * a.terms().rbegin()->second;
}

namespace {

std::string describe(const TraceStep& s) {
  switch (s.kind) {
    case TraceStep::Kind::Substitute:
      return "item " + std::to_string(s.source) + " under " + s.map.to_string();
    case TraceStep::Kind::Combine: {
      std::string out;
      for (std::size_t i = 0; i < s.items.size(); ++i) {
        if (i) out += " + ";
        out += "(" + s.coefficients[i].to_string() + ")*item " + std::to_string(s.items[i]);
      }
      return out;
    }
    case TraceStep::Kind::Divide:
      return "item " + std::to_string(s.source) + " / u1^" + std::to_string(s.exponent);
    case TraceStep::Kind::Witness:
      return "witness " + s.var.to_string();
  }
  return {};
}

struct Example {
  std::string name;
  std::string equation;
  Mode mode;
};

}  // namespace

bool DemoTranscript::ok() const {
  if (!verified || checks.empty()) return false;
  for (const auto& c : checks)
    if (!c.match) return false;
  return true;
}

DemoTranscript run_demo(const Golden& golden, const ModelConfig& cfg, unsigned samples) {
  const std::vector<Example> examples{{"curve", "(y' - D(x,2)) * x' = 0", Mode::Curve},
                                      {"multi", "x*u1 + u2 = 0", Mode::Multi}};
  DemoTranscript out;
  std::map<std::string, std::string> used;
  for (const auto& ex : examples) {
    const DiffPoly f = parse_equation(ex.equation);
    const Definition def = ex.mode == Mode::Curve ? define_from_curve(f) : define_from_multi(f);
    const DerivationTrace& tr = def.trace;
    const VerificationReport report = verify_trace(tr, cfg, samples);
    if (report.verdict != Verdict::Verified) out.verified = false;

    nlohmann::json items = nlohmann::json::array();
    for (std::size_t i = 0; i < tr.item_count(); ++i) {
      const DiffPoly y = from_u_coordinates(tr.item(i), tr.chain);
      items.push_back({{"index", i},
                       {"step", i == 0 ? std::string("input") : describe(tr.steps[i - 1])},
                       {"polynomial", y.to_string()}});
    }
    out.examples.push_back({{"name", ex.name},
                            {"equation", ex.equation},
                            {"mode", to_string(ex.mode)},
                            {"items", items},
                            {"terminal", report.terminal},
                            {"formula", def.formula.to_string()},
                            {"verdict", to_string(report.verdict)}});

    const std::string prefix = ex.name + ".";
    for (const auto& [key, text] : golden) {
      if (key.rfind(prefix, 0) != 0) continue;
      used[key] = ex.name;
      const std::string field = key.substr(prefix.size());
      DemoCheck c{key, text, "", false};
      std::optional<std::size_t> index;
      if (field == "input")
        index = 0;
      else if (field == "terminal")
        index = tr.terminal_index();
      else if (field.rfind("item", 0) == 0 && field.size() > 4 &&
               field.find_first_not_of("0123456789", 4) == std::string::npos)
        index = std::stoul(field.substr(4));
      if (!index || *index >= tr.item_count()) {
        c.actual = "<no such item>";
      } else {
        const DiffPoly actual = from_u_coordinates(tr.item(*index), tr.chain);
        c.actual = actual.to_string();
        try {
          c.match = proportional(actual, parse_poly(text));
        } catch (const ParseError&) {
          c.match = false;
        }
      }
      out.checks.push_back(std::move(c));
    }
  }
  for (const auto& [key, text] : golden)
    if (!used.count(key)) out.checks.push_back({key, text, "<unknown example>", false});
  return out;
}

std::string DemoTranscript::to_text() const {
  std::ostringstream os;
  for (const auto& ex : examples) {
    os << "== " << ex["name"].get<std::string>() << " (" << ex["mode"].get<std::string>()
       << "): " << ex["equation"].get<std::string>() << "\n";
    for (const auto& it : ex["items"])
      os << "  [" << it["index"].get<std::size_t>() << "] " << it["polynomial"].get<std::string>() << "    <- "
         << it["step"].get<std::string>() << "\n";
    os << "  terminal: " << ex["terminal"].get<std::string>() << "\n";
    os << "  formula:  " << ex["formula"].get<std::string>() << "\n";
    os << "  verdict:  " << ex["verdict"].get<std::string>() << "\n";
  }
  os << "== golden checks\n";
  for (const auto& c : checks) {
    os << "  " << (c.match ? "match    " : "MISMATCH ") << c.key;
    if (!c.match) os << ": expected " << c.expected << ", got " << c.actual;
    os << "\n";
  }
  os << (ok() ? "demo: ok\n" : "demo: FAILED\n");
  return os.str();
}

nlohmann::json DemoTranscript::to_json() const {
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : checks)
    cs.push_back({{"key", c.key}, {"expected", c.expected}, {"actual", c.actual}, {"match", c.match}});
  return {{"schema", kDemoSchema}, {"examples", examples}, {"checks", cs}, {"ok", ok()}};
}

}  // namespace diffdef
