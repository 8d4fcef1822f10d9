#pragma once

#include <map>
#include <string>
#include <vector>

#include "phin/rational.hpp"

namespace phin {

// Parameters of the degree-n mode algebra
//
//   [a_m, a_{m'}] = delta_{m,-m'} Pi(m) 1,      a_0 = q 1,
//
// where a_m are the Fourier modes of the n-th derivative of the chiral
// U(1) current (a conformally covariant field of weight n+1) and
// Pi(m) = prod_{k=0}^{2n} (m-n+k). The zeroth mode is central; q is its
// value in the chosen representation (0 in the vacuum representation,
// which is the only value compatible with a Moebius-invariant vacuum).
struct StructureConstants {
  int degree = 1;
  Rational zero_mode = 0;
};

// Pi(m) = prod_{k=0}^{2n} (m-n+k). Odd in m; vanishes exactly for |m| <= n.
Rational structure_pi(int degree, int mode);

// Pi(m)/m for m != 0. Even in m and non-negative. Throws on mode == 0.
Rational structure_pi_prime(int degree, int mode);

// Ordered product a_{m_1} ... a_{m_k}; indices are arbitrary integers.
using Word = std::vector<int>;

// A finite linear combination of normal-ordered words plus a central scalar.
// Normal order: strictly negative indices first, then strictly positive ones,
// each block sorted ascending; zero indices never appear (a_0 is resolved to
// its central value during ordering). No zero coefficients are stored.
struct AlgebraElement {
  std::map<Word, Rational> words;
  Rational scalar = 0;

  bool is_zero() const { return words.empty() && scalar == 0; }
  void add_term(const Word& word, const Rational& coefficient);

  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement& operator-=(const AlgebraElement& other);
  AlgebraElement& operator*=(const Rational& factor);

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
};

AlgebraElement operator+(AlgebraElement lhs, const AlgebraElement& rhs);
AlgebraElement operator-(AlgebraElement lhs, const AlgebraElement& rhs);
AlgebraElement operator*(AlgebraElement element, const Rational& factor);

// The single generator a_m as an element.
AlgebraElement mode_symbol(int mode);

// Rewrites a word into normal order modulo the commutation relations and
// a_0 = q. Each swap either strictly lowers the inversion count or emits a
// two-letter-shorter word, so the rewriting terminates.
AlgebraElement normal_order(const Word& word, const StructureConstants& constants);
AlgebraElement normal_order(const AlgebraElement& element, const StructureConstants& constants);

AlgebraElement multiply(const AlgebraElement& lhs, const AlgebraElement& rhs,
                        const StructureConstants& constants);

// x*y - y*x, fully normal ordered.
AlgebraElement commutator(const AlgebraElement& lhs, const AlgebraElement& rhs,
                          const StructureConstants& constants);

// Scalar part of normal_order(word): <vac| a_{m_1} ... a_{m_k} |vac>.
Rational vacuum_expectation(const Word& word, const StructureConstants& constants);

// Canonical textual form: "c * a[m1] a[m2] ... + ... + c0 * 1".
std::string to_string(const AlgebraElement& element);

}  // namespace phin
