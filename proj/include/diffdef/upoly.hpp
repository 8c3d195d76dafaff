#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "diffdef/rational.hpp"

namespace diffdef {

/// Dense univariate polynomial over Q in the indeterminate t.
/// Coefficients are stored from the constant term upward with no trailing zeros,
/// so the zero polynomial has an empty coefficient vector.
class UPoly {
 public:
  UPoly() = default;
  UPoly(const Rational& c);  // NOLINT: constants convert implicitly
  UPoly(int c) : UPoly(Rational(c)) {}  // NOLINT
  explicit UPoly(std::vector<Rational> coeffs);

  static UPoly t() { return monomial(Rational(1), 1); }
  static UPoly monomial(const Rational& c, std::size_t degree);

  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const noexcept { return c_; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  Rational lead() const { return c_.empty() ? Rational(0) : c_.back(); }

  UPoly operator-() const;
  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const UPoly& o);
  UPoly& operator*=(const Rational& s);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(UPoly a, const Rational& s) { return a *= s; }

  friend bool operator==(const UPoly& a, const UPoly& b) = default;
  /// Total order used for deterministic container keys (degree, then coefficients).
  friend std::strong_ordering operator<=>(const UPoly& a, const UPoly& b);

  /// Euclidean division; throws DivisionByZero for a zero divisor.
  std::pair<UPoly, UPoly> divmod(const UPoly& divisor) const;
  UPoly monic() const;
  UPoly derivative() const;
  Rational eval(const Rational& at) const;
  /// p(t + shift), i.e. the Taylor expansion around `shift`.
  UPoly shifted(const Rational& shift) const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Monic gcd over Q (zero if both inputs are zero).
UPoly gcd(UPoly a, UPoly b);

}  // namespace diffdef
