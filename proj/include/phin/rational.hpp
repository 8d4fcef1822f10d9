#pragma once

#include <gmpxx.h>

#include <string>

namespace phin {

// Exact scalar type. All algebraic computations in this library are carried
// out over the rationals; nothing in the exact layer ever rounds.
using Rational = mpq_class;
using Integer = mpz_class;

// num/den, reduced to lowest terms.
Rational make_rational(long num, long den = 1);

// Parses "p" or "p/q" (arbitrary precision). Throws std::invalid_argument on
// malformed input or zero denominator.
Rational rational_from_string(const std::string& text);

// Canonical form used in reports: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& value);

double to_double(const Rational& value);

// Product (base)(base-1)...(base-count+1); count = 0 gives 1.
Integer falling_factorial(long base, long count);

}  // namespace phin
