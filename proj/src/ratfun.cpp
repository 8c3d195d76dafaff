#include "diffdef/ratfun.hpp"

#include "diffdef/errors.hpp"

namespace diffdef {

namespace {

bool single_term(const UPoly& p) {
  std::size_t n = 0;
  for (const auto& c : p.coeffs())
    if (c != 0) ++n;
  return n <= 1;
}

}  // namespace

RationalFunction::RationalFunction(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero();
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = UPoly(1);
    return;
  }
  if (!den_.is_constant()) {
    UPoly g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = num_.divmod(g).first;
      den_ = den_.divmod(g).first;
    }
  }
  const Rational lead = den_.lead();
  if (lead != 1) {
    const Rational inv = 1 / lead;
    num_ *= inv;
    den_ *= inv;
  }
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
    normalize();
    return *this;
  }
  if (o.den_.is_one() || den_.is_one()) {
    // the sum stays in lowest terms
    if (o.den_.is_one()) {
      num_ += o.num_ * den_;
    } else {
      num_ = num_ * o.den_ + o.num_;
      den_ = o.den_;
    }
    if (num_.is_zero()) den_ = UPoly(1);
    return *this;
  }
  // Henrici: only the gcd of the denominators can cancel against the new numerator
  const UPoly g = gcd(den_, o.den_);
  if (g.is_one()) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    return *this;
  }
  const UPoly a = den_.divmod(g).first;
  const UPoly b = o.den_.divmod(g).first;
  num_ = num_ * b + o.num_ * a;
  den_ = a * o.den_;
  if (num_.is_zero()) {
    den_ = UPoly(1);
    return *this;
  }
  const UPoly h = gcd(num_, g);
  if (!h.is_one()) {
    num_ = num_.divmod(h).first;
    den_ = den_.divmod(h).first;
  }
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  if (is_zero() || o.is_zero()) return *this = RationalFunction();
  // cross-cancel; both operands are already in lowest terms
  const UPoly g1 = gcd(num_, o.den_);
  const UPoly g2 = gcd(o.num_, den_);
  UPoly n1 = g1.is_one() ? num_ : num_.divmod(g1).first;
  UPoly d2 = g1.is_one() ? o.den_ : o.den_.divmod(g1).first;
  UPoly n2 = g2.is_one() ? o.num_ : o.num_.divmod(g2).first;
  UPoly d1 = g2.is_one() ? den_ : den_.divmod(g2).first;
  num_ = n1 * n2;
  den_ = d1 * d2;
  const Rational lead = den_.lead();
  if (lead != 1) {
    const Rational inv = 1 / lead;
    num_ *= inv;
    den_ *= inv;
  }
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) { return *this *= o.inverse(); }

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(unsigned e) const {
  RationalFunction r(1);
  RationalFunction b = *this;
  while (e != 0) {
    if (e & 1u) r *= b;
    e >>= 1;
    if (e != 0) b *= b;
  }
  return r;
}

RationalFunction RationalFunction::derivative() const {
  if (den_.is_one()) return RationalFunction(num_.derivative());
  return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

Rational RationalFunction::eval(const Rational& at) const {
  const Rational d = den_.eval(at);
  if (d == 0) throw PoleError("pole of " + to_string() + " at t = " + at.get_str());
  return num_.eval(at) / d;
}

std::strong_ordering operator<=>(const RationalFunction& a, const RationalFunction& b) {
  if (auto c = a.num_ <=> b.num_; c != 0) return c;
  return a.den_ <=> b.den_;
}

std::string RationalFunction::to_string() const {
  if (den_.is_one()) return num_.to_string();
  std::string n = num_.to_string();
  std::string d = den_.to_string();
  if (!single_term(num_)) n = "(" + n + ")";
  // a monic single-term denominator prints as "t" or "t^k"
  if (!single_term(den_)) d = "(" + d + ")";
  return n + "/" + d;
}

bool RationalFunction::prints_as_factor() const { return den_.is_one() && single_term(num_); }

RationalFunction nth_derivative(const RationalFunction& q, unsigned k) {
  RationalFunction r = q;
  for (unsigned i = 0; i < k && !r.is_zero(); ++i) r = r.derivative();
  return r;
}

}  // namespace diffdef
