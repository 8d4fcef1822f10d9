#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "phin/rational.hpp"

namespace phin {

// Noncommutative Laurent differential operators in one variable z: finite
// sums  sum_{a,b} c_{a,b} z^a D^b  with integer a (negative powers allowed)
// and b >= 0, where D = d/dz. The normal form keeps every power of z to the
// left of every D; composition is driven by the single relation
//
//   D z^a = z^a D + a z^{a-1}   (all integer a).
//
// Canonical term order: a descending, then b ascending.
struct LaurentTermOrder {
  bool operator()(const std::pair<int, int>& x, const std::pair<int, int>& y) const {
    if (x.first != y.first) return x.first > y.first;
    return x.second < y.second;
  }
};

struct LaurentDiffOp {
  std::map<std::pair<int, int>, Rational, LaurentTermOrder> terms;

  bool is_zero() const { return terms.empty(); }
  void add_term(int z_power, int d_power, const Rational& coefficient);

  LaurentDiffOp& operator+=(const LaurentDiffOp& other);
  LaurentDiffOp& operator-=(const LaurentDiffOp& other);
  LaurentDiffOp& operator*=(const Rational& factor);

  friend bool operator==(const LaurentDiffOp&, const LaurentDiffOp&) = default;
};

LaurentDiffOp operator+(LaurentDiffOp lhs, const LaurentDiffOp& rhs);
LaurentDiffOp operator-(LaurentDiffOp lhs, const LaurentDiffOp& rhs);
LaurentDiffOp operator*(LaurentDiffOp op, const Rational& factor);

// z^a as an operator (multiplication); a may be negative.
LaurentDiffOp z_power(int a);
// D^b; b >= 0 (throws std::invalid_argument otherwise).
LaurentDiffOp d_power(int b);
LaurentDiffOp constant_op(const Rational& c);

// Normal form of A followed-by B as operators (A acts after B on functions,
// i.e. the product A*B of the noncommutative algebra). Associative, bilinear.
LaurentDiffOp compose(const LaurentDiffOp& A, const LaurentDiffOp& B);

// Applies the operator to the Laurent monomial z^p; the result is the Laurent
// polynomial sum_e coeff_e z^e, returned as exponent -> coefficient.
std::map<int, Rational> apply_to_monomial(const LaurentDiffOp& op, int p);

// Verification of the differential-operator identities behind the mode
// commutation relations:
//
//   base:  z^{-2n} D z^2 D z^{2n} D^{2n-1} z^{-2}  =  D^{2n+1}
//   step:  z^{-2(n+1)} D z^2 D z^{2(n+1)} D^{2n+1} z^{-2}  =  D^{2n+3}
//
// The step identity is what pushes the base case from n to n+1; checking both
// for a given n therefore covers the whole inductive chain up to that degree
// without ever expanding the large intermediate products monolithically.
struct KernelIdentityReport {
  int degree = 0;
  bool base_holds = false;
  bool step_holds = false;
  LaurentDiffOp base_form;  // computed normal form of the base left-hand side
  LaurentDiffOp step_form;  // computed normal form of the step left-hand side
};

KernelIdentityReport kernel_identity_check(int degree);

// Residue of z^q D^order z^p, i.e. the coefficient of z^{-1} in
// q(z) (d/dz)^order p(z) for monomials: equals p(p-1)...(p-order+1) when
// p + q - order = -1 and 0 otherwise.
Rational residue_pairing(int p, int q, int order);

// The mode commutator [a_m, a_{m'}] recovered from the residue pairing of the
// monomials z^{n+m}, z^{n+m'} against the (2n+1)-fold derivative kernel.
// Equals delta_{m,-m'} * structure_pi(n, m) -- an independent route to the
// structure constants that never touches the oscillator rewriting engine.
Rational mode_commutator_via_kernel(int degree, int m, int m_prime);

// Canonical text: terms as "c * z^a * D^b" (factors with zero exponent are
// omitted; a bare scalar term prints as "c"), joined by " + ", in the
// canonical term order.
std::string to_string(const LaurentDiffOp& op);

}  // namespace phin
