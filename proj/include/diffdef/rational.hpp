#pragma once

#include <gmpxx.h>

#include <string>

namespace diffdef {

// GMP keeps mpq_class canonical after every arithmetic operation:
// lowest terms, positive denominator, zero stored as 0/1.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// max(|numerator|, denominator)
inline Integer height(const Rational& q) {
  Integer n = abs(q.get_num());
  return n > q.get_den() ? n : Integer(q.get_den());
}

}  // namespace diffdef
