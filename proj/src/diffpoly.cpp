#include "diffdef/diffpoly.hpp"

#include <algorithm>

#include "diffdef/errors.hpp"

namespace diffdef {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(const DerIndet& d, unsigned exponent) {
  if (exponent == 0) return;
  factors_.emplace_back(d, exponent);
  degree_ = exponent;
}

unsigned Monomial::exponent(const DerIndet& d) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), d,
                             [](const Factor& f, const DerIndet& key) { return f.first < key; });
  return (it != factors_.end() && it->first == d) ? it->second : 0;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  Monomial r;
  r.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
      r.factors_.push_back(*i++);
    } else if (i == a.factors_.end() || j->first < i->first) {
      r.factors_.push_back(*j++);
    } else {
      r.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  r.degree_ = a.degree_ + b.degree_;
  return r;
}

std::optional<Monomial> Monomial::divide(const Monomial& b) const {
  Monomial r;
  auto j = b.factors_.begin();
  for (const auto& [d, e] : factors_) {
    if (j != b.factors_.end() && j->first < d) return std::nullopt;
    if (j != b.factors_.end() && j->first == d) {
      if (j->second > e) return std::nullopt;
      if (j->second < e) r.factors_.emplace_back(d, e - j->second);
      ++j;
    } else {
      r.factors_.emplace_back(d, e);
    }
  }
  if (j != b.factors_.end()) return std::nullopt;
  r.degree_ = degree_ - b.degree_;
  return r;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
  // lex with the smallest indeterminate most significant
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  for (; i != a.factors_.end() && j != b.factors_.end(); ++i, ++j) {
    if (i->first != j->first) return i->first < j->first ? std::strong_ordering::greater : std::strong_ordering::less;
    if (i->second != j->second) return i->second <=> j->second;
  }
  if (i != a.factors_.end()) return std::strong_ordering::greater;
  if (j != b.factors_.end()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& [d, e] : factors_) {
    if (!out.empty()) out += "*";
    out += d.to_string();
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

// ---------------------------------------------------------------- DiffPoly

DiffPoly::DiffPoly(const RationalFunction& c) {
  if (!c.is_zero()) terms_.emplace(Monomial(), c);
}

DiffPoly::DiffPoly(const Monomial& m, const RationalFunction& c) {
  if (!c.is_zero()) terms_.emplace(m, c);
}

void DiffPoly::add_term(const Monomial& m, const RationalFunction& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

bool DiffPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

RationalFunction DiffPoly::constant_value() const { return coeff(Monomial()); }

RationalFunction DiffPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? RationalFunction() : it->second;
}

DiffPoly DiffPoly::operator-() const {
  DiffPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

DiffPoly& DiffPoly::operator+=(const DiffPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

DiffPoly& DiffPoly::operator-=(const DiffPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

DiffPoly& DiffPoly::operator*=(const RationalFunction& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  if (s.is_one()) return *this;
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

DiffPoly operator*(const DiffPoly& a, const DiffPoly& b) {
  DiffPoly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

DiffPoly DiffPoly::pow(unsigned e) const {
  DiffPoly r(1);
  DiffPoly b = *this;
  while (e != 0) {
    if (e & 1u) r *= b;
    e >>= 1;
    if (e != 0) b = b * b;
  }
  return r;
}

DiffPoly DiffPoly::derive() const {
  DiffPoly r;
  for (const auto& [m, c] : terms_) {
    r.add_term(m, c.derivative());
    const auto& fs = m.factors();
    for (std::size_t i = 0; i < fs.size(); ++i) {
      const auto& [d, e] = fs[i];
      Monomial rest;
      for (std::size_t j = 0; j < fs.size(); ++j)
        if (j != i) rest = rest * Monomial(fs[j].first, fs[j].second);
      rest = rest * Monomial(d, e - 1) * Monomial(DerIndet{d.var, d.order + 1});
      r.add_term(rest, c * RationalFunction(Rational(e)));
    }
  }
  return r;
}

DiffPoly DiffPoly::derive(unsigned k) const {
  DiffPoly r = *this;
  for (unsigned i = 0; i < k && !r.is_zero(); ++i) r = r.derive();
  return r;
}

std::optional<unsigned> DiffPoly::order_of(const Var& v) const {
  std::optional<unsigned> best;
  for (const auto& [m, c] : terms_)
    for (const auto& [d, e] : m.factors())
      if (d.var == v && (!best || d.order > *best)) best = d.order;
  return best;
}

unsigned DiffPoly::max_order() const {
  unsigned best = 0;
  for (const auto& [m, c] : terms_)
    for (const auto& [d, e] : m.factors()) best = std::max(best, d.order);
  return best;
}

std::set<Var> DiffPoly::variables() const {
  std::set<Var> vs;
  for (const auto& [m, c] : terms_)
    for (const auto& [d, e] : m.factors()) vs.insert(d.var);
  return vs;
}

unsigned DiffPoly::total_degree() const {
  unsigned best = 0;
  for (const auto& [m, c] : terms_) best = std::max(best, m.degree());
  return best;
}

std::optional<DiffPoly> DiffPoly::divide_exact(const DiffPoly& d) const {
  if (d.is_zero()) throw DivisionByZero();
  const auto& [lm_d, lc_d] = *d.terms_.rbegin();
  const RationalFunction inv = lc_d.inverse();
  DiffPoly rem = *this;
  DiffPoly quo;
  while (!rem.is_zero()) {
    const auto& [lm_r, lc_r] = *rem.terms_.rbegin();
    auto m = lm_r.divide(lm_d);
    if (!m) return std::nullopt;
    DiffPoly step(*m, lc_r * inv);
    quo += step;
    rem -= step * d;
  }
  return quo;
}

std::string DiffPoly::to_string() const {
  if (terms_.empty()) return "0";
  if (is_constant()) return constant_value().to_string();
  std::vector<const Terms::value_type*> order;
  order.reserve(terms_.size());
  for (const auto& kv : terms_) order.push_back(&kv);
  std::stable_sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
    if (a->first.degree() != b->first.degree()) return a->first.degree() > b->first.degree();
    return std::lexicographical_compare(a->first.factors().begin(), a->first.factors().end(),
                                        b->first.factors().begin(), b->first.factors().end());
  });
  std::string out;
  for (const auto* kv : order) {
    const Monomial& m = kv->first;
    RationalFunction c = kv->second;
    const bool negative = c.num().lead() < 0;
    if (negative) c = -c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const std::string cs = c.prints_as_factor() ? c.to_string() : "(" + c.to_string() + ")";
    if (m.is_one()) {
      out += cs;
    } else if (c.is_one()) {
      out += m.to_string();
    } else {
      out += cs + "*" + m.to_string();
    }
  }
  return out;
}

// ---------------------------------------------------------------- DegreeVector

std::strong_ordering operator<=>(const DegreeVector& a, const DegreeVector& b) {
  const std::size_t n = std::max(a.exps.size(), b.exps.size());
  for (std::size_t k = n; k-- > 0;) {
    unsigned x = k < a.exps.size() ? a.exps[k] : 0;
    unsigned y = k < b.exps.size() ? b.exps[k] : 0;
    if (x != y) return x <=> y;
  }
  return std::strong_ordering::equal;
}

std::string DegreeVector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(exps[i]);
  }
  return out + ")";
}

DegreeVector n1_degree(const DiffPoly& f, const Var& v, unsigned n) {
  if (f.is_zero()) throw HypothesisError("n1_degree of the zero polynomial");
  DegreeVector best;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    DegreeVector dv{std::vector<unsigned>(n + 1, 0)};
    for (const auto& [d, e] : m.factors()) {
      if (d.var != v) throw HypothesisError("n1_degree: " + d.to_string() + " is not a derivative of " + v.to_string());
      if (d.order > n) throw HypothesisError("n1_degree: order bound " + std::to_string(n) + " exceeded");
      dv.exps[d.order] = e;
    }
    if (first || dv > best) best = std::move(dv);
    first = false;
  }
  return best;
}

}  // namespace diffdef
