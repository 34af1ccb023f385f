#pragma once

#include <string_view>
#include <utility>

#include "cyclift/polynomial.hpp"

namespace cyclift {

/// Parses and expands text such as "(x+y)^2 - 3/4*x*y" over the given ring.
///
/// Grammar: integer literals, variable names from vars, + - * / ^ and
/// parentheses. '/' is accepted only when the divisor is a nonzero constant
/// or divides the dividend exactly; exponents are non-negative integers.
/// Throws ParseError (with byte offset) or UnknownVariable.
Polynomial parse_polynomial(std::string_view text, const Variables& vars);

/// Parses a quotient of polynomials such as "a/(x+y)" and returns
/// (numerator, denominator) with the denominator nonzero. The pair is not
/// reduced beyond exact division.
std::pair<Polynomial, Polynomial> parse_fraction(std::string_view text, const Variables& vars);

}  // namespace cyclift
