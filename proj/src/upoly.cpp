#include "diffdef/upoly.hpp"

#include "diffdef/errors.hpp"

namespace diffdef {

UPoly::UPoly(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(const Rational& c, std::size_t degree) {
  UPoly p;
  if (c == 0) return p;
  p.c_.assign(degree + 1, Rational(0));
  p.c_[degree] = c;
  return p;
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(r));
}

UPoly& UPoly::operator*=(const UPoly& o) { return *this = *this * o; }

UPoly& UPoly::operator*=(const Rational& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

std::strong_ordering operator<=>(const UPoly& a, const UPoly& b) {
  if (a.c_.size() != b.c_.size()) return a.c_.size() <=> b.c_.size();
  for (std::size_t i = a.c_.size(); i-- > 0;) {
    int s = cmp(a.c_[i], b.c_[i]);
    if (s != 0) return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& divisor) const {
  if (divisor.is_zero()) throw DivisionByZero();
  if (degree() < divisor.degree()) return {UPoly(), *this};
  std::vector<Rational> rem = c_;
  std::vector<Rational> quo(c_.size() - divisor.c_.size() + 1, Rational(0));
  const Rational inv_lead = 1 / divisor.lead();
  const std::size_t dn = divisor.c_.size();
  for (std::size_t k = quo.size(); k-- > 0;) {
    Rational q = rem[k + dn - 1] * inv_lead;
    quo[k] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j < dn; ++j) rem[k + j] -= q * divisor.c_[j];
  }
  return {UPoly(std::move(quo)), UPoly(std::move(rem))};
}

UPoly UPoly::monic() const {
  if (is_zero()) return {};
  return *this * Rational(1 / lead());
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
  return UPoly(std::move(r));
}

Rational UPoly::eval(const Rational& at) const {
  Rational acc(0);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * at + c_[i];
  return acc;
}

UPoly UPoly::shifted(const Rational& shift) const {
  if (shift == 0 || c_.size() <= 1) return *this;
  // Horner in the ring Q[t]: p(t + s) = (...(c_n (t+s) + c_{n-1}) (t+s) + ...)
  const UPoly step(std::vector<Rational>{shift, Rational(1)});
  UPoly acc;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * step + UPoly(c_[i]);
  return acc;
}

std::string UPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Rational& c = c_[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (i == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "t";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

namespace {

using IntPoly = std::vector<Integer>;

// Integer multiple of p with content 1 and positive leading coefficient.
IntPoly primitive(const UPoly& p) {
  Integer den = 1;
  for (const auto& c : p.coeffs()) den = lcm(den, Integer(c.get_den()));
  IntPoly v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.push_back(c.get_num() * (den / c.get_den()));
  Integer g = 0;
  for (const auto& a : v) g = gcd(g, a);
  if (v.back() < 0) g = -g;
  for (auto& a : v) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
  return v;
}

void make_primitive(IntPoly& v) {
  Integer g = 0;
  for (const auto& a : v) g = gcd(g, a);
  if (v.back() < 0) g = -g;
  for (auto& a : v) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
}

// lead(b)^k * a mod b over Z
IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
  const Integer& lb = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    const Integer la = a.back();
    const std::size_t shift = a.size() - b.size();
    for (auto& x : a) x *= lb;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= la * b[j];
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

}  // namespace

// Primitive remainder sequence over Z: avoids the coefficient swell of Euclid over Q.
UPoly gcd(UPoly a, UPoly b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  IntPoly x = primitive(a);
  IntPoly y = primitive(b);
  if (x.size() < y.size()) std::swap(x, y);
  while (y.size() > 1) {
    IntPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    if (r.empty()) break;
    make_primitive(r);
    y = std::move(r);
  }
  if (y.size() == 1) return UPoly(1);
  std::vector<Rational> c(x.begin(), x.end());
  return UPoly(std::move(c)).monic();
}

}  // namespace diffdef
