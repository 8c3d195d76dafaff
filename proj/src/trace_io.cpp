#include "diffdef/trace_io.hpp"

#include "diffdef/parse.hpp"

namespace diffdef {

namespace {

nlohmann::json vars_json(const std::vector<Var>& vs) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& v : vs) a.push_back(v.to_string());
  return a;
}

std::vector<Var> vars_from(const nlohmann::json& a) {
  std::vector<Var> out;
  for (const auto& v : a) out.push_back(parse_var(v.get<std::string>()));
  return out;
}

const char* step_kind(TraceStep::Kind k) {
  switch (k) {
    case TraceStep::Kind::Substitute:
      return "substitute";
    case TraceStep::Kind::Combine:
      return "combine";
    case TraceStep::Kind::Divide:
      return "divide";
    case TraceStep::Kind::Witness:
      return "witness";
  }
  return "";
}

}  // namespace

nlohmann::json trace_to_json(const DerivationTrace& trace) {
  nlohmann::json j;
  j["schema"] = kTraceSchema;
  j["mode"] = to_string(trace.mode);
  j["chain"] = {{"x", trace.chain.x.to_string()}, {"ys", vars_json(trace.chain.ys)}, {"us", vars_json(trace.chain.us)}};
  nlohmann::json rel;
  rel["name"] = trace.relation.name;
  rel["slots"] = vars_json(trace.relation.slots);
  rel["equations"] = nlohmann::json::array();
  for (const auto& e : trace.relation.equations) rel["equations"].push_back(e.to_string());
  rel["side"] = trace.relation.side ? nlohmann::json(trace.relation.side->to_string()) : nlohmann::json();
  j["relation"] = rel;
  j["input"] = trace.input.to_string();
  j["steps"] = nlohmann::json::array();
  for (const auto& s : trace.steps) {
    nlohmann::json o;
    o["kind"] = step_kind(s.kind);
    switch (s.kind) {
      case TraceStep::Kind::Substitute:
        o["source"] = s.source;
        o["alpha"] = s.map.alpha.to_string();
        o["beta"] = s.map.beta.to_string();
        o["result"] = s.result.to_string();
        break;
      case TraceStep::Kind::Combine: {
        o["items"] = s.items;
        nlohmann::json cs = nlohmann::json::array();
        for (const auto& c : s.coefficients) cs.push_back(c.to_string());
        o["coefficients"] = cs;
        o["result"] = s.result.to_string();
        break;
      }
      case TraceStep::Kind::Divide:
        o["source"] = s.source;
        o["exponent"] = s.exponent;
        o["result"] = s.result.to_string();
        break;
      case TraceStep::Kind::Witness:
        o["var"] = s.var.to_string();
        o["value"] = s.result.to_string();
        break;
    }
    j["steps"].push_back(o);
  }
  j["formula"] = trace.formula.to_string();
  return j;
}

DerivationTrace trace_from_json(const nlohmann::json& j) {
  try {
    if (j.at("schema").get<std::string>() != kTraceSchema)
      throw Error("unsupported trace schema '" + j.at("schema").get<std::string>() + "'");
    DerivationTrace t;
    t.mode = mode_from_string(j.at("mode").get<std::string>());
    const auto& ch = j.at("chain");
    t.chain.x = parse_var(ch.at("x").get<std::string>());
    t.chain.ys = vars_from(ch.at("ys"));
    t.chain.us = vars_from(ch.at("us"));
    if (t.chain.ys.empty() || t.chain.ys.size() != t.chain.us.size()) throw Error("malformed chain");
    const auto& rel = j.at("relation");
    t.relation.name = rel.at("name").get<std::string>();
    t.relation.slots = vars_from(rel.at("slots"));
    for (const auto& e : rel.at("equations")) t.relation.equations.push_back(parse_poly(e.get<std::string>()));
    if (rel.contains("side") && !rel.at("side").is_null())
      t.relation.side = parse_formula(rel.at("side").get<std::string>());
    t.input = parse_poly(j.at("input").get<std::string>());
    for (const auto& o : j.at("steps")) {
      TraceStep s;
      const std::string kind = o.at("kind").get<std::string>();
      if (kind == "substitute") {
        s.kind = TraceStep::Kind::Substitute;
        s.source = o.at("source").get<std::size_t>();
        s.map = {parse_ratfun(o.at("alpha").get<std::string>()), parse_ratfun(o.at("beta").get<std::string>())};
        s.result = parse_poly(o.at("result").get<std::string>());
      } else if (kind == "combine") {
        s.kind = TraceStep::Kind::Combine;
        s.items = o.at("items").get<std::vector<std::size_t>>();
        for (const auto& c : o.at("coefficients")) s.coefficients.push_back(parse_ratfun(c.get<std::string>()));
        s.result = parse_poly(o.at("result").get<std::string>());
      } else if (kind == "divide") {
        s.kind = TraceStep::Kind::Divide;
        s.source = o.at("source").get<std::size_t>();
        s.exponent = o.at("exponent").get<unsigned>();
        s.result = parse_poly(o.at("result").get<std::string>());
      } else if (kind == "witness") {
        s.kind = TraceStep::Kind::Witness;
        s.var = parse_var(o.at("var").get<std::string>());
        s.result = parse_poly(o.at("value").get<std::string>());
      } else {
        throw Error("unknown step kind '" + kind + "'");
      }
      t.steps.push_back(std::move(s));
    }
    t.formula = parse_formula(j.at("formula").get<std::string>());
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed trace: ") + e.what());
  }
}

}  // namespace diffdef
