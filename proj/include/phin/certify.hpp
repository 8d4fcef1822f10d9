#pragma once

#include <string>
#include <vector>

#include "phin/fock.hpp"

namespace phin {

// Linear polynomial  constant + u_coefficient * u  in the formal parameter
// u = gamma^{-2}, gamma being the proportionality constant between the
// candidate stress-tensor mode L_{-2} and the unique effective energy-2
// creator. Carrying u symbolically certifies statements for every admissible
// gamma at once instead of sampling values.
struct GammaPolynomial {
  Rational constant = 0;
  Rational u_coefficient = 0;

  bool is_zero() const { return constant == 0 && u_coefficient == 0; }

  GammaPolynomial& operator+=(const GammaPolynomial& other);
  GammaPolynomial& operator-=(const GammaPolynomial& other);
  GammaPolynomial& operator*=(const Rational& factor);

  friend bool operator==(const GammaPolynomial&, const GammaPolynomial&) = default;
};

GammaPolynomial operator+(GammaPolynomial lhs, const GammaPolynomial& rhs);
GammaPolynomial operator-(GammaPolynomial lhs, const GammaPolynomial& rhs);
GammaPolynomial operator*(GammaPolynomial p, const Rational& factor);

std::string to_string(const GammaPolynomial& p);

// Coefficient of c in the central term of the Virasoro bracket [L_m, L_{-m}]:
// the bracket is (2m) L_0 + c * virasoro_central_term(m) * 1, and the value
// is m(m^2-1)/12 obtained from the triple-derivative residue pairing of
// z^{m+1} against z^{-m+1} -- not from the closed formula.
Rational virasoro_central_term(int mode);

// One Virasoro consistency check: the relation [L_m, L_{-m}] =
// (2m) L_0 + c * virasoro_central_term(m) * 1, transported through the
// identification a_k = gamma L_k, evaluated on a witness state. Both sides
// are linear polynomials in u = gamma^{-2}; a nonzero, u-free mismatch is a
// contradiction valid for every gamma.
struct VirasoroCheck {
  int mode = 0;               // the pair is (mode, -mode)
  FockVector witness;
  int level = 0;              // homogeneous level of the witness
  Rational witness_norm = 0;  // <witness, witness>, exact
  Rational central_coefficient = 0;  // virasoro_central_term(mode)
  Rational bracket_expectation = 0;  // <witness, [a_mode, a_{-mode}] witness>
  GammaPolynomial required;   // (2m * level + c * central_coefficient) * norm, c = 12u
  GammaPolynomial actual;     // u * bracket_expectation
  GammaPolynomial mismatch;   // required - actual

  friend bool operator==(const VirasoroCheck&, const VirasoroCheck&) = default;
};

VirasoroCheck evaluate_virasoro_check(int degree, int mode, const FockVector& witness,
                                      const GammaPolynomial& central_charge);

// Machine-checkable witness that the degree-n model has no stress-energy
// tensor (or that this obstruction argument does not apply). Every number in
// the certificate is re-derivable from the exact engines; verify_certificate
// replays them all.
struct Certificate {
  std::string variant;  // "NullLevelTwo" | "UniqueCandidateContradiction" | "NoObstruction"
  int degree = 0;
  std::size_t level2_dimension = 0;  // raw level-2 basis count
  std::size_t level2_rank = 0;       // effective energy-2 multiplicity d2
  GramMatrix level2_gram;

  // NullLevelTwo branch: c = 2 ||L_{-2} vacuum||^2 forced to 0 because the
  // whole energy-2 space is null; Theta = 0 then needs c >= 0 as well.
  Rational central_charge = 0;
  bool positivity_side_condition = false;

  // UniqueCandidateContradiction branch.
  std::string gamma_relation;        // the calibration "c|gamma|^2 = 12"
  GammaPolynomial central_charge_u;  // c expressed in u = gamma^{-2}
  std::vector<VirasoroCheck> checks;  // first entry is the primary witness
  std::string inference_note;        // the axiom-labelled field-identification step

  std::string conclusion;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

Certificate certify(int degree);

struct VerificationResult {
  bool ok = true;
  std::vector<std::string> failures;  // names of fields that failed the replay
};

// Recomputes every recorded quantity from scratch and compares bit-exactly.
VerificationResult verify_certificate(const Certificate& certificate);

}  // namespace phin
