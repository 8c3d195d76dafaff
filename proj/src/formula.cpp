#include "diffdef/formula.hpp"

#include "diffdef/parse.hpp"
#include "diffdef/substitution.hpp"

namespace diffdef {

AlgTerm::AlgTerm(DiffPoly p) : p_(std::move(p)) {
  if (p_.max_order() > 0) throw HypothesisError("term " + p_.to_string() + " mentions a derivative");
}

Formula Formula::eq(AlgTerm term) {
  Formula f;
  f.kind_ = Kind::Eq;
  f.args_.push_back(std::move(term));
  return f;
}

Formula Formula::ne(AlgTerm term) { return neg(eq(std::move(term))); }

Formula Formula::rel(std::string name, std::vector<AlgTerm> args) {
  Formula f;
  f.kind_ = Kind::Rel;
  f.name_ = std::move(name);
  f.args_ = std::move(args);
  return f;
}

Formula Formula::conj(std::vector<Formula> children) {
  std::vector<Formula> flat;
  for (auto& c : children) {
    if (c.kind_ == Kind::And) {
      for (const auto& g : c.children_) flat.push_back(g);
    } else {
      flat.push_back(std::move(c));
    }
  }
  if (flat.empty()) return eq(AlgTerm());
  if (flat.size() == 1) return flat.front();
  Formula f;
  f.kind_ = Kind::And;
  f.children_ = std::move(flat);
  return f;
}

Formula Formula::disj(std::vector<Formula> children) {
  std::vector<Formula> flat;
  for (auto& c : children) {
    if (c.kind_ == Kind::Or) {
      for (const auto& g : c.children_) flat.push_back(g);
    } else {
      flat.push_back(std::move(c));
    }
  }
  if (flat.empty()) return ne(AlgTerm());
  if (flat.size() == 1) return flat.front();
  Formula f;
  f.kind_ = Kind::Or;
  f.children_ = std::move(flat);
  return f;
}

Formula Formula::neg(Formula child) {
  Formula f;
  f.kind_ = Kind::Not;
  f.children_.push_back(std::move(child));
  return f;
}

Formula Formula::exists(std::vector<Var> vars, Formula body) {
  if (vars.empty()) return body;
  if (body.kind_ == Kind::Exists) {
    vars.insert(vars.end(), body.vars_.begin(), body.vars_.end());
    Formula inner = body.children_.front();
    return exists(std::move(vars), std::move(inner));
  }
  Formula f;
  f.kind_ = Kind::Exists;
  f.vars_ = std::move(vars);
  f.children_.push_back(std::move(body));
  return f;
}

bool Formula::is_quantifier_free() const {
  if (kind_ == Kind::Exists) return false;
  for (const auto& c : children_)
    if (!c.is_quantifier_free()) return false;
  return true;
}

bool Formula::is_existential() const {
  switch (kind_) {
    case Kind::Eq:
    case Kind::Rel:
      return true;
    case Kind::Not:
      return children_.front().is_quantifier_free();
    case Kind::And:
    case Kind::Or:
    case Kind::Exists:
      for (const auto& c : children_)
        if (!c.is_existential()) return false;
      return true;
  }
  return false;
}

std::set<Var> Formula::atom_variables() const {
  std::set<Var> out;
  for (const auto& a : args_) {
    auto vs = a.poly().variables();
    out.insert(vs.begin(), vs.end());
  }
  for (const auto& c : children_) {
    auto vs = c.atom_variables();
    out.insert(vs.begin(), vs.end());
  }
  return out;
}

std::set<Var> Formula::free_variables() const {
  std::set<Var> out;
  for (const auto& a : args_) {
    auto vs = a.poly().variables();
    out.insert(vs.begin(), vs.end());
  }
  for (const auto& c : children_) {
    auto vs = c.free_variables();
    out.insert(vs.begin(), vs.end());
  }
  for (const auto& v : vars_) out.erase(v);
  return out;
}

Formula Formula::substitute(const std::map<Var, DiffPoly>& values) const {
  std::map<Var, DiffPoly> visible = values;
  for (const auto& v : vars_) visible.erase(v);
  Formula f = *this;
  for (auto& a : f.args_) {
    a = AlgTerm(diffdef::substitute(a.poly(), [&](const DerIndet& d) -> std::optional<DiffPoly> {
      auto it = visible.find(d.var);
      if (it == visible.end()) return std::nullopt;
      return it->second.derive(d.order);
    }));
  }
  for (auto& c : f.children_) c = c.substitute(visible);
  return f;
}

namespace {

std::string wrap(const std::string& s) { return "(" + s + ")"; }

}  // namespace

std::string Formula::to_string() const {
  switch (kind_) {
    case Kind::Eq:
      return term().to_string() + " = 0";
    case Kind::Rel: {
      std::string out = name_ + "(";
      for (std::size_t i = 0; i < args_.size(); ++i) {
        if (i) out += ", ";
        out += args_[i].to_string();
      }
      return out + ")";
    }
    case Kind::And:
    case Kind::Or: {
      std::string out;
      const char* sep = kind_ == Kind::And ? " & " : " | ";
      for (std::size_t i = 0; i < children_.size(); ++i) {
        if (i) out += sep;
        const Formula& c = children_[i];
        const bool paren = c.kind_ == Kind::Exists || (kind_ == Kind::And && c.kind_ == Kind::Or);
        out += paren ? wrap(c.to_string()) : c.to_string();
      }
      return out;
    }
    case Kind::Not: {
      const Formula& c = children_.front();
      if (c.kind_ == Kind::Eq) return c.term().to_string() + " != 0";
      if (c.kind_ == Kind::Rel) return "!" + c.to_string();
      return "!" + wrap(c.to_string());
    }
    case Kind::Exists: {
      std::string out;
      for (const auto& v : vars_) out += "exists " + v.to_string() + ". ";
      const Formula& body = children_.front();
      const bool paren = body.kind_ == Kind::And || body.kind_ == Kind::Or;
      return out + (paren ? wrap(body.to_string()) : body.to_string());
    }
  }
  return {};
}

namespace {

const char* kind_name(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Eq:
      return "eq";
    case Formula::Kind::Rel:
      return "rel";
    case Formula::Kind::And:
      return "and";
    case Formula::Kind::Or:
      return "or";
    case Formula::Kind::Not:
      return "not";
    case Formula::Kind::Exists:
      return "exists";
  }
  return "";
}

}  // namespace

nlohmann::json Formula::to_json() const {
  nlohmann::json j;
  j["kind"] = kind_name(kind_);
  if (kind_ == Kind::Rel) j["name"] = name_;
  if (!args_.empty()) {
    j["args"] = nlohmann::json::array();
    for (const auto& a : args_) j["args"].push_back(a.to_string());
  }
  if (kind_ == Kind::Exists) {
    j["vars"] = nlohmann::json::array();
    for (const auto& v : vars_) j["vars"].push_back(v.to_string());
  }
  if (!children_.empty()) {
    j["children"] = nlohmann::json::array();
    for (const auto& c : children_) j["children"].push_back(c.to_json());
  }
  return j;
}

Formula Formula::from_json(const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  auto args = [&] {
    std::vector<AlgTerm> out;
    for (const auto& a : j.at("args")) out.emplace_back(parse_poly(a.get<std::string>()));
    return out;
  };
  auto children = [&] {
    std::vector<Formula> out;
    for (const auto& c : j.at("children")) out.push_back(from_json(c));
    return out;
  };
  if (kind == "eq") return eq(args().at(0));
  if (kind == "rel") return rel(j.at("name").get<std::string>(), args());
  if (kind == "and") return conj(children());
  if (kind == "or") return disj(children());
  if (kind == "not") return neg(children().at(0));
  if (kind == "exists") {
    std::vector<Var> vars;
    for (const auto& v : j.at("vars")) vars.push_back(parse_var(v.get<std::string>()));
    return exists(std::move(vars), children().at(0));
  }
  throw Error("unknown formula kind '" + kind + "'");
}

RationalFunction RatfunModel::eval(const DiffPoly& p, const std::map<Var, Value>& assignment) const {
  return eval_ratfun(p, assignment);
}

}  // namespace diffdef
