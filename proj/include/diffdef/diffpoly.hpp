#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "diffdef/ratfun.hpp"

namespace diffdef {

/// What a variable stands for in the graph constructions.
/// The declaration order is the primary key of the canonical variable order.
enum class Role : std::uint8_t {
  Base,        // x
  Target,      // y, y1 ... yn
  Difference,  // u, u1 ... un   (u_i = y_i - D^i x)
  Auxiliary,   // z, z1 ...      (existential slots, parameters)
};

struct Var {
  Role role = Role::Base;
  std::string name = "x";
  unsigned index = 0;  // 0 renders as the bare name

  friend auto operator<=>(const Var&, const Var&) = default;
  friend bool operator==(const Var&, const Var&) = default;

  std::string to_string() const { return index == 0 ? name : name + std::to_string(index); }

  static Var x() { return {Role::Base, "x", 0}; }
  static Var y(unsigned i = 0) { return {Role::Target, "y", i}; }
  static Var u(unsigned i = 0) { return {Role::Difference, "u", i}; }
  static Var z(unsigned i = 0) { return {Role::Auxiliary, "z", i}; }
};

/// Position in a y/u chain: y and u (index 0) sit at level 1.
inline unsigned chain_level(const Var& v) { return v.index == 0 ? 1 : v.index; }

/// D^order(var), an atomic indeterminate of the differential polynomial ring.
struct DerIndet {
  Var var;
  unsigned order = 0;

  friend auto operator<=>(const DerIndet&, const DerIndet&) = default;
  friend bool operator==(const DerIndet&, const DerIndet&) = default;

  /// x, x', x'' ...
  std::string to_string() const { return var.to_string() + std::string(order, '\''); }
};

/// A power product of indeterminates; the empty product is 1.
class Monomial {
 public:
  using Factor = std::pair<DerIndet, unsigned>;

  Monomial() = default;
  explicit Monomial(const DerIndet& d, unsigned exponent = 1);

  const std::vector<Factor>& factors() const noexcept { return factors_; }
  unsigned degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return factors_.empty(); }
  unsigned exponent(const DerIndet& d) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exact quotient when b divides a.
  std::optional<Monomial> divide(const Monomial& b) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Graded lexicographic on the sorted (var, order) factors.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

  std::string to_string() const;

 private:
  std::vector<Factor> factors_;  // sorted by DerIndet, exponents > 0
  unsigned degree_ = 0;
};

/// Sparse differential polynomial over Q(t): a finite map Monomial -> nonzero coefficient.
class DiffPoly {
 public:
  using Terms = std::map<Monomial, RationalFunction>;

  DiffPoly() = default;
  DiffPoly(const RationalFunction& c);  // NOLINT
  DiffPoly(const Rational& c) : DiffPoly(RationalFunction(c)) {}  // NOLINT
  DiffPoly(int c) : DiffPoly(RationalFunction(c)) {}  // NOLINT
  DiffPoly(const Monomial& m, const RationalFunction& c);

  static DiffPoly var(const Var& v, unsigned order = 0) { return DiffPoly(Monomial(DerIndet{v, order}), 1); }
  static DiffPoly indet(const DerIndet& d) { return DiffPoly(Monomial(d), 1); }
  static DiffPoly t() { return DiffPoly(RationalFunction::t()); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// The Q(t) value of a constant polynomial (zero if empty).
  RationalFunction constant_value() const;
  RationalFunction coeff(const Monomial& m) const;
  std::size_t size() const noexcept { return terms_.size(); }

  DiffPoly operator-() const;
  DiffPoly& operator+=(const DiffPoly& o);
  DiffPoly& operator-=(const DiffPoly& o);
  DiffPoly& operator*=(const DiffPoly& o) { return *this = *this * o; }
  DiffPoly& operator*=(const RationalFunction& s);
  friend DiffPoly operator+(DiffPoly a, const DiffPoly& b) { return a += b; }
  friend DiffPoly operator-(DiffPoly a, const DiffPoly& b) { return a -= b; }
  friend DiffPoly operator*(const DiffPoly& a, const DiffPoly& b);
  friend DiffPoly operator*(DiffPoly a, const RationalFunction& s) { return a *= s; }
  friend DiffPoly operator*(const RationalFunction& s, DiffPoly a) { return a *= s; }
  DiffPoly pow(unsigned e) const;

  friend bool operator==(const DiffPoly&, const DiffPoly&) = default;

  /// The derivation D: d/dt on coefficients, D(D^k v) = D^{k+1} v, Leibniz on products.
  DiffPoly derive() const;
  DiffPoly derive(unsigned k) const;

  /// Highest derivative order of v occurring, or nullopt if v does not occur.
  std::optional<unsigned> order_of(const Var& v) const;
  /// Highest derivative order over all variables (0 for constants).
  unsigned max_order() const;
  std::set<Var> variables() const;
  unsigned total_degree() const;

  /// Exact quotient in the polynomial ring over Q(t), or nullopt if `d` does not divide.
  std::optional<DiffPoly> divide_exact(const DiffPoly& d) const;

  /// Canonical text: terms by descending degree, then ascending variable order.
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const RationalFunction& c);
  Terms terms_;
};

DiffPoly operator*(const DiffPoly& a, const DiffPoly& b);

/// Reverse-lexicographic exponent tuple (a_0, ..., a_n) of one variable.
/// (a) < (b) iff for some k, a_i = b_i for i > k and a_k < b_k.
struct DegreeVector {
  std::vector<unsigned> exps;

  friend bool operator==(const DegreeVector&, const DegreeVector&) = default;
  friend std::strong_ordering operator<=>(const DegreeVector& a, const DegreeVector& b);
  std::string to_string() const;
};

/// Reverse-lex greatest exponent tuple of f in v with order bound n.
/// Requires f != 0 and that every indeterminate of f is a derivative of v.
DegreeVector n1_degree(const DiffPoly& f, const Var& v, unsigned n);

}  // namespace diffdef
