#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include "phin/rational.hpp"

namespace phin {

// Arbitrary-precision float with runtime-selectable precision. Everything
// algebraic stays rational; BigFloat only enters for square roots,
// exponentials and eigenvalues, always after the exact assembly is done.
using BigFloat = boost::multiprecision::mpfr_float;

// Working precision, in decimal digits, for BigFloats created afterwards.
inline void set_float_precision(unsigned digits) {
  BigFloat::default_precision(digits);
}

inline unsigned float_precision() { return BigFloat::default_precision(); }

inline BigFloat to_bigfloat(const Rational& value) {
  // Numerator and denominator convert exactly; one rounding in the division.
  BigFloat num(value.get_num().get_str());
  BigFloat den(value.get_den().get_str());
  return num / den;
}

}  // namespace phin
