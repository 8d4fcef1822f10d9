#pragma once

#include <map>
#include <string>

#include "phin/bigfloat.hpp"
#include "phin/fock.hpp"

namespace phin {

struct ComplexRational {
  Rational re = 0;
  Rational im = 0;

  bool is_zero() const { return re == 0 && im == 0; }
  Rational abs_squared() const { return re * re + im * im; }

  friend bool operator==(const ComplexRational&, const ComplexRational&) = default;
};

// Finitely supported sequence of Fourier coefficients f_m of a smooth test
// function on the circle. Coefficients are exact complex rationals so the
// smeared state below can be assembled without rounding. When real_constraint
// is set the sequence is meant to satisfy f_{-m} = conj(f_m).
struct SmearedFunction {
  std::map<int, ComplexRational> coefficients;
  bool real_constraint = false;
};

// Whether f_{-m} = conj(f_m) holds for every stored mode.
bool satisfies_reality(const SmearedFunction& f);

struct BoundReport {
  std::string kind;  // "annihilator" | "creator" | "smeared"
  int degree = 0;
  int mode = 0;   // unused (0) for smeared reports
  int level = 0;  // state level; maximum level of the input state for smeared
  std::size_t effective_dimension = 0;  // rank of the level Gram form
  BigFloat observed = 0;       // max ||a_m psi||^2 over unit psi, resp. smeared LHS
  BigFloat bound = 0;          // analytic right-hand side
  Rational bound_exact = 0;    // exact value of the bound when it is rational
  bool bound_is_exact = false;
  BigFloat min_eigenvalue = 0;  // smallest generalized eigenvalue encountered
  double tolerance = 0;
  bool pass = false;
  std::string note;
};

// Maximum of ||a_m psi||^2 over unit-norm effective level-N states, compared
// against the bound N * pi_prime(m). The maximization runs over the range of
// the exact Gram form (null directions carry no Hilbert-space content and are
// excluded by restricting to the positive-pivot support); only the final
// eigenvalue step leaves exact arithmetic.
BoundReport annihilator_bound_check(int degree, int mode, int level,
                                    double tolerance = 1e-9);

// Same maximization for ||a_{-m} psi||^2 against (N + m) * pi_prime(m). Also
// replays the exact ladder identity on every basis state of the level (throws
// std::logic_error if it ever failed, which would falsify the commutation
// relations themselves).
BoundReport creator_bound_check(int degree, int mode, int level,
                                double tolerance = 1e-9);

// ||a_{-m} state||^2 - ||a_m state||^2 - pi(m) * ||state||^2, exact. Zero for
// every state; exposed so tests can assert the identity directly.
Rational ladder_defect(int degree, int mode, const FockVector& state);

// Linear energy bound for the smeared mode sum: with v = sum_m f_m a_m state,
//   ||v||  <=  ||(L_0 + 1) state|| * sum_m |f_m| (|m| + pi_prime(m) + |q| + 1)
// where pi_prime(0) is taken as 0. The left side is assembled exactly
// (complex-rational coefficients) and rounded only for the final square root.
// A creator pushing any component of the state past max_level raises
// std::runtime_error rather than silently truncating.
BoundReport smeared_bound_check(int degree, const SmearedFunction& f,
                                const FockVector& state, const Rational& zero_mode,
                                int max_level, double tolerance = 1e-9);

}  // namespace phin
