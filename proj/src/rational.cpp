#include "phin/rational.hpp"

#include <stdexcept>

namespace phin {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational rational_from_string(const std::string& text) {
  Rational r;
  if (mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0) {
    throw std::invalid_argument("rational_from_string: cannot parse '" + text + "'");
  }
  if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0) {
    throw std::invalid_argument("rational_from_string: zero denominator in '" + text + "'");
  }
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  return value.get_str();
}

double to_double(const Rational& value) {
  return value.get_d();
}

Integer falling_factorial(long base, long count) {
  Integer product = 1;
  for (long i = 0; i < count; ++i) product *= Integer(base - i);
  return product;
}

}  // namespace phin
