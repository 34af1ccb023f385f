#pragma once

#include <gmpxx.h>

#include <string>

namespace cyclift {

// Exact rationals; mpq_class keeps the value canonical (reduced, positive
// denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace cyclift
