#pragma once

#include <string_view>

#include "diffdef/diffpoly.hpp"

namespace diffdef {

// Polynomial DSL:
//   poly   := ['-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*        division only by variable-free factors
//   factor := base ('^' nat)?
//   base   := integer | 't' | var '\''* | 'D(' var ',' nat ')' | '(' poly ')'
//   var    := ('x'|'y'|'u'|'z') digits?
// All functions throw ParseError with the byte offset of the problem.

DiffPoly parse_poly(std::string_view text);

/// "lhs = rhs" as lhs - rhs; a bare polynomial means "poly = 0".
DiffPoly parse_equation(std::string_view text);

/// A variable-free polynomial expression, e.g. "(t^2 - t)/(t + 1)".
RationalFunction parse_ratfun(std::string_view text);

/// "x", "y2", "z1" ...
Var parse_var(std::string_view text);

}  // namespace diffdef
