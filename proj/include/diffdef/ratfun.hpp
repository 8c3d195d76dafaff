#pragma once

#include <compare>
#include <string>

#include "diffdef/upoly.hpp"

namespace diffdef {

/// An element of the base differential field Q(t) with derivation d/dt.
///
/// Canonical form: gcd(numerator, denominator) = 1 and the denominator is monic,
/// so two equal field elements are structurally equal.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(const Rational& c) : num_(c), den_(1) {}  // NOLINT
  RationalFunction(int c) : RationalFunction(Rational(c)) {}  // NOLINT
  RationalFunction(UPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT
  /// Throws DivisionByZero if `den` is zero.
  RationalFunction(UPoly num, UPoly den);

  static RationalFunction t() { return RationalFunction(UPoly::t()); }

  const UPoly& num() const noexcept { return num_; }
  const UPoly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const noexcept { return den_.is_one(); }
  bool is_constant() const noexcept { return num_.is_constant() && den_.is_one(); }
  /// The constant value; only meaningful when is_constant().
  Rational constant() const { return num_.coeff(0); }

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

  /// Throws DivisionByZero for zero.
  RationalFunction inverse() const;
  RationalFunction pow(unsigned e) const;
  /// d/dt by the quotient rule.
  RationalFunction derivative() const;
  /// Value at a rational point; throws PoleError if the denominator vanishes there.
  Rational eval(const Rational& at) const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) = default;
  friend std::strong_ordering operator<=>(const RationalFunction& a, const RationalFunction& b);

  /// "(t^2 - t)/(t + 1)", or just the numerator when the denominator is 1.
  std::string to_string() const;
  /// True when to_string() is a single signed product (no top-level +/-), so it can be
  /// used as a factor without parentheses.
  bool prints_as_factor() const;

 private:
  void normalize();
  UPoly num_;
  UPoly den_;
};

/// d^k/dt^k
RationalFunction nth_derivative(const RationalFunction& q, unsigned k);

}  // namespace diffdef
