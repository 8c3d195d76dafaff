#include "diffdef/parse.hpp"

#include <cctype>

#include "diffdef/errors.hpp"
#include "diffdef/formula.hpp"

namespace diffdef {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  char peek2() {
    skip_ws();
    return pos_ + 1 < s_.size() ? s_[pos_ + 1] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  void expect_end() {
    if (!at_end()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }
  std::size_t pos() const { return pos_; }
  void reset(std::size_t p) { pos_ = p; }

  // identifier at the cursor without consuming it
  std::string_view peek_ident() {
    skip_ws();
    std::size_t e = pos_;
    if (e < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[e])) || s_[e] == '_')) {
      while (e < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[e])) || s_[e] == '_')) ++e;
    }
    return s_.substr(pos_, e - pos_);
  }

  unsigned parse_nat() {
    skip_ws();
    std::size_t e = pos_;
    while (e < s_.size() && std::isdigit(static_cast<unsigned char>(s_[e]))) ++e;
    if (e == pos_) fail("expected a natural number");
    if (e - pos_ > 6) fail("number too large");
    unsigned v = static_cast<unsigned>(std::stoul(std::string(s_.substr(pos_, e - pos_))));
    pos_ = e;
    return v;
  }

  Var parse_variable() {
    const std::size_t start = pos_;
    std::string_view id = peek_ident();
    if (id.empty()) fail("expected a variable");
    auto v = var_from_ident(id);
    if (!v) {
      pos_ = start;
      skip_ws();
      fail("unknown variable '" + std::string(id) + "'");
    }
    pos_ += id.size();
    return *v;
  }

  static std::optional<Var> var_from_ident(std::string_view id) {
    if (id.empty()) return std::nullopt;
    const char c = id[0];
    std::string_view digits = id.substr(1);
    for (char d : digits)
      if (!std::isdigit(static_cast<unsigned char>(d))) return std::nullopt;
    if (digits.size() > 6) return std::nullopt;
    if (!digits.empty() && digits[0] == '0') return std::nullopt;
    unsigned idx = digits.empty() ? 0 : static_cast<unsigned>(std::stoul(std::string(digits)));
    switch (c) {
      case 'x':
        if (idx != 0) return std::nullopt;
        return Var::x();
      case 'y':
        return Var::y(idx);
      case 'u':
        return Var::u(idx);
      case 'z':
        return Var::z(idx);
      default:
        return std::nullopt;
    }
  }

  DiffPoly parse_poly() {
    DiffPoly r;
    if (accept('-')) {
      r = -parse_term();
    } else {
      r = parse_term();
    }
    for (;;) {
      if (accept('+')) {
        r += parse_term();
      } else if (peek() == '-') {
        ++pos_;
        r -= parse_term();
      } else {
        return r;
      }
    }
  }

  DiffPoly parse_term() {
    DiffPoly r = parse_factor();
    for (;;) {
      if (accept('*')) {
        r *= parse_factor();
      } else if (peek() == '/') {
        ++pos_;
        const std::size_t at = pos_;
        DiffPoly d = parse_factor();
        if (!d.is_constant()) {
          pos_ = at;
          fail("division by a non-constant");
        }
        if (d.is_zero()) {
          pos_ = at;
          fail("division by zero");
        }
        r *= d.constant_value().inverse();
      } else {
        return r;
      }
    }
  }

  DiffPoly parse_factor() {
    DiffPoly b = parse_base();
    if (accept('^')) b = b.pow(parse_nat());
    return b;
  }

  DiffPoly parse_base() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      DiffPoly r = parse_poly();
      expect(')');
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t e = pos_;
      while (e < s_.size() && std::isdigit(static_cast<unsigned char>(s_[e]))) ++e;
      Integer v(std::string(s_.substr(pos_, e - pos_)));
      pos_ = e;
      return DiffPoly(Rational(v));
    }
    std::string_view id = peek_ident();
    if (id.empty()) fail(c == '\0' ? "unexpected end of input" : "unexpected '" + std::string(1, c) + "'");
    if (id == "t") {
      pos_ += 1;
      return DiffPoly::t();
    }
    if (id == "D") {
      pos_ += 1;
      expect('(');
      Var v = parse_variable();
      expect(',');
      unsigned k = parse_nat();
      expect(')');
      return DiffPoly::var(v, k);
    }
    Var v = parse_variable();
    unsigned order = 0;
    while (pos_ < s_.size() && s_[pos_] == '\'') {
      ++order;
      ++pos_;
    }
    return DiffPoly::var(v, order);
  }

  // ---------------------------------------------------------------- formulas

  Formula parse_disj() {
    std::vector<Formula> parts{parse_conj()};
    while (accept('|')) parts.push_back(parse_conj());
    return parts.size() == 1 ? parts.front() : Formula::disj(std::move(parts));
  }

  Formula parse_conj() {
    std::vector<Formula> parts{parse_unary()};
    while (accept('&')) parts.push_back(parse_unary());
    return parts.size() == 1 ? parts.front() : Formula::conj(std::move(parts));
  }

  Formula parse_unary() {
    const char c = peek();
    if (c == '!' && peek2() != '=') {
      ++pos_;
      return Formula::neg(parse_unary());
    }
    if (peek_ident() == "exists") {
      pos_ += 6;
      std::vector<Var> vars{parse_variable()};
      while (accept(',')) vars.push_back(parse_variable());
      expect('.');
      return Formula::exists(std::move(vars), parse_unary());
    }
    if (c == '(') {
      const std::size_t save = pos_;
      try {
        ++pos_;
        Formula f = parse_disj();
        expect(')');
        const char n = peek();
        if (n != '=' && n != '*' && n != '^' && n != '+' && n != '-' && n != '/' && !(n == '!' && peek2() == '='))
          return f;
      } catch (const ParseError&) {
      }
      pos_ = save;
    }
    return parse_atom();
  }

  AlgTerm alg(const DiffPoly& p, std::size_t at) {
    if (p.max_order() > 0) {
      pos_ = at;
      fail("derivatives are not allowed in formula atoms");
    }
    return AlgTerm(p);
  }

  Formula parse_atom() {
    std::string_view id = peek_ident();
    if (!id.empty() && std::isupper(static_cast<unsigned char>(id[0])) && id != "D") {
      const std::size_t save = pos_;
      pos_ += id.size();
      if (peek() == '(') {
        ++pos_;
        std::vector<AlgTerm> args;
        do {
          const std::size_t at = pos_;
          args.push_back(alg(parse_poly(), at));
        } while (accept(','));
        expect(')');
        return Formula::rel(std::string(id), std::move(args));
      }
      pos_ = save;
    }
    const std::size_t at = pos_;
    DiffPoly lhs = parse_poly();
    bool negated = false;
    if (peek() == '!' && peek2() == '=') {
      pos_ += 2;
      negated = true;
    } else if (!accept('=')) {
      fail("expected '=' or '!='");
    }
    DiffPoly rhs = parse_poly();
    AlgTerm term = alg(lhs - rhs, at);
    return negated ? Formula::ne(std::move(term)) : Formula::eq(std::move(term));
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

DiffPoly parse_poly(std::string_view text) {
  Parser p(text);
  DiffPoly r = p.parse_poly();
  p.expect_end();
  return r;
}

DiffPoly parse_equation(std::string_view text) {
  Parser p(text);
  DiffPoly r = p.parse_poly();
  if (p.accept('=')) r -= p.parse_poly();
  p.expect_end();
  return r;
}

RationalFunction parse_ratfun(std::string_view text) {
  Parser p(text);
  DiffPoly r = p.parse_poly();
  p.expect_end();
  if (!r.is_constant()) throw ParseError("expected an expression in t only", 0);
  return r.constant_value();
}

Var parse_var(std::string_view text) {
  Parser p(text);
  Var v = p.parse_variable();
  p.expect_end();
  return v;
}

Formula parse_formula(std::string_view text) {
  Parser p(text);
  Formula f = p.parse_disj();
  p.expect_end();
  return f;
}

}  // namespace diffdef
