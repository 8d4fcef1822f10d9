#include "phin/certify.hpp"

#include <sstream>
#include <stdexcept>

#include "phin/exact_linalg.hpp"
#include "phin/laurent.hpp"

namespace phin {

GammaPolynomial& GammaPolynomial::operator+=(const GammaPolynomial& other) {
  constant += other.constant;
  u_coefficient += other.u_coefficient;
  return *this;
}

GammaPolynomial& GammaPolynomial::operator-=(const GammaPolynomial& other) {
  constant -= other.constant;
  u_coefficient -= other.u_coefficient;
  return *this;
}

GammaPolynomial& GammaPolynomial::operator*=(const Rational& factor) {
  constant *= factor;
  u_coefficient *= factor;
  return *this;
}

GammaPolynomial operator+(GammaPolynomial lhs, const GammaPolynomial& rhs) {
  lhs += rhs;
  return lhs;
}

GammaPolynomial operator-(GammaPolynomial lhs, const GammaPolynomial& rhs) {
  lhs -= rhs;
  return lhs;
}

GammaPolynomial operator*(GammaPolynomial p, const Rational& factor) {
  p *= factor;
  return p;
}

std::string to_string(const GammaPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  if (p.constant != 0) out << to_string(p.constant);
  if (p.u_coefficient != 0) {
    if (p.constant != 0) out << " + ";
    out << to_string(p.u_coefficient) << "*u";
  }
  return out.str();
}

Rational virasoro_central_term(int mode) {
  return residue_pairing(mode + 1, -mode + 1, 3) / Rational(12);
}

VirasoroCheck evaluate_virasoro_check(int degree, int mode, const FockVector& witness,
                                      const GammaPolynomial& central_charge) {
  if (witness.is_zero()) {
    throw std::invalid_argument("evaluate_virasoro_check: witness must be nonzero");
  }
  const auto level = witness.homogeneous_level();
  if (!level) {
    throw std::invalid_argument("evaluate_virasoro_check: witness must be homogeneous");
  }
  const StructureConstants constants{degree, Rational(0)};

  VirasoroCheck check;
  check.mode = mode;
  check.witness = witness;
  check.level = *level;
  check.witness_norm = inner_product(witness, witness, constants);
  check.central_coefficient = virasoro_central_term(mode);

  const FockVector bracket_image =
      apply_mode(mode, apply_mode(-mode, witness, constants), constants) -
      apply_mode(-mode, apply_mode(mode, witness, constants), constants);
  check.bracket_expectation = inner_product(witness, bracket_image, constants);

  // Required: <psi, ((2m) L_0 + c * central_coefficient) psi> with c linear
  // in u. Actual: the same bracket with L_k replaced by gamma^{-1} a_k, whose
  // expectation is u * <psi, [a_m, a_{-m}] psi> by the centrality of the mode
  // commutator.
  check.required = GammaPolynomial{Rational(2 * mode * check.level) * check.witness_norm, 0};
  check.required += central_charge * (check.central_coefficient * check.witness_norm);
  check.actual = GammaPolynomial{0, check.bracket_expectation};
  check.mismatch = check.required - check.actual;
  return check;
}

namespace {

const char* GAMMA_RELATION_PREFIX = "c|gamma|^2 = ";

std::string gamma_relation_text(const Rational& value) {
  return GAMMA_RELATION_PREFIX + to_string(value);
}

std::string null_level_conclusion(int degree) {
  std::ostringstream out;
  out << "every energy-2 vector of the degree-" << degree
      << " model is null, so any candidate satisfies ||L_{-2} vacuum||^2 = 0 and "
         "c = 2 * ||L_{-2} vacuum||^2 = 0; together with the side conditions c >= 0 "
         "and 'the field vanishes iff c = 0', no nonzero stress-energy tensor exists.";
  return out.str();
}

std::string contradiction_conclusion(const Rational& gap) {
  std::ostringstream out;
  out << "the Virasoro relation [L_2, L_{-2}] = 4 L_0 + (c/2) 1, transported through "
         "a_k = gamma L_k, fails on the witness state by the gamma-independent gap "
      << to_string(gap)
      << "; since the gap survives for every admissible gamma, no stress-energy "
         "tensor exists.";
  return out.str();
}

std::string no_obstruction_conclusion(std::size_t d2) {
  std::ostringstream out;
  out << "the effective energy-2 multiplicity is " << d2
      << ", so the energy-2 ray is not unique and this obstruction argument does not "
         "apply; the degree-0 model (the current itself) indeed carries a quadratic "
         "(Sugawara) stress tensor.";
  return out.str();
}

}  // namespace

Certificate certify(int degree) {
  if (degree < 0) throw std::invalid_argument("certify: degree must be >= 0");

  Certificate cert;
  cert.degree = degree;
  cert.level2_gram = gram_matrix(degree, 2);
  cert.level2_dimension = cert.level2_gram.dimension();
  cert.level2_rank = bareiss_rank(cert.level2_gram.entries);

  if (cert.level2_rank == 0) {
    cert.variant = "NullLevelTwo";
    cert.central_charge = 0;
    cert.positivity_side_condition = true;
    cert.conclusion = null_level_conclusion(degree);
    return cert;
  }

  if (cert.level2_rank == 1) {
    cert.variant = "UniqueCandidateContradiction";
    const StructureConstants constants{degree, Rational(0)};

    // The unique effective ray at energy 2 is spanned by a_{-2} vacuum, so a
    // stress tensor would satisfy a_{-2} vacuum = gamma L_{-2} vacuum. Taking
    // norms calibrates c: ||a_{-2} vacuum||^2 = |gamma|^2 ||L_{-2} vacuum||^2
    // = |gamma|^2 c / 2, i.e. c |gamma|^2 = 2 ||a_{-2} vacuum||^2 and
    // c = 2 ||a_{-2} vacuum||^2 * u.
    const FockVector generator = basis_vector(PartitionState{2});
    const Rational generator_norm = inner_product(generator, generator, constants);
    cert.gamma_relation = gamma_relation_text(2 * generator_norm);
    cert.central_charge_u = GammaPolynomial{0, 2 * generator_norm};

    cert.inference_note =
        "[axiom: Reeh-Schlieder / cyclicity of the vacuum] the vanishing two-point "
        "constant C = ||(a_{-2} - gamma L_{-2}) vacuum||^2 = 0 forces the difference "
        "field to vanish identically, hence a_k = gamma L_k for every mode k.";

    cert.checks.push_back(
        evaluate_virasoro_check(degree, 2, generator, cert.central_charge_u));
    // Redundant sweep: more (m, -m) pairs and witnesses. The u-terms cancel in
    // each mismatch for the same reason as in the primary check, so every gap
    // is gamma-independent.
    cert.checks.push_back(evaluate_virasoro_check(
        degree, 3, generator, cert.central_charge_u));
    cert.checks.push_back(evaluate_virasoro_check(
        degree, 4, generator, cert.central_charge_u));
    cert.checks.push_back(evaluate_virasoro_check(
        degree, 2, basis_vector(PartitionState{3}), cert.central_charge_u));
    cert.checks.push_back(evaluate_virasoro_check(
        degree, 3, basis_vector(PartitionState{3}), cert.central_charge_u));
    cert.checks.push_back(evaluate_virasoro_check(
        degree, 5, basis_vector(PartitionState{2, 2}), cert.central_charge_u));

    cert.conclusion = contradiction_conclusion(cert.checks.front().mismatch.constant);
    return cert;
  }

  cert.variant = "NoObstruction";
  cert.conclusion = no_obstruction_conclusion(cert.level2_rank);
  return cert;
}

namespace {

void require(VerificationResult& result, bool condition, const std::string& field) {
  if (!condition) {
    result.ok = false;
    result.failures.push_back(field);
  }
}

void verify_check(VerificationResult& result, const Certificate& cert, std::size_t index) {
  const VirasoroCheck& recorded = cert.checks[index];
  const std::string prefix = "checks[" + std::to_string(index) + "].";
  VirasoroCheck replay;
  try {
    replay = evaluate_virasoro_check(cert.degree, recorded.mode, recorded.witness,
                                     cert.central_charge_u);
  } catch (const std::invalid_argument&) {
    require(result, false, prefix + "witness");
    return;
  }
  require(result, recorded.level == replay.level, prefix + "level");
  require(result, recorded.witness_norm == replay.witness_norm, prefix + "witness_norm");
  require(result, recorded.central_coefficient == replay.central_coefficient,
          prefix + "central_coefficient");
  require(result, recorded.bracket_expectation == replay.bracket_expectation,
          prefix + "bracket_expectation");
  require(result, recorded.required == replay.required, prefix + "required");
  require(result, recorded.actual == replay.actual, prefix + "actual");
  require(result, recorded.mismatch == replay.mismatch, prefix + "mismatch");
  // The contradiction itself: nonzero and free of u, i.e. valid for every gamma.
  require(result, replay.mismatch.u_coefficient == 0, prefix + "mismatch.u_coefficient");
  require(result, replay.mismatch.constant != 0, prefix + "mismatch.constant");
}

}  // namespace

VerificationResult verify_certificate(const Certificate& cert) {
  VerificationResult result;
  if (cert.degree < 0) {
    require(result, false, "degree");
    return result;
  }

  const GramMatrix gram = gram_matrix(cert.degree, 2);
  const std::size_t rank = bareiss_rank(gram.entries);
  require(result, cert.level2_gram.basis == gram.basis, "level2_gram.basis");
  require(result, cert.level2_gram.entries == gram.entries, "level2_gram.entries");
  require(result, cert.level2_dimension == gram.dimension(), "level2_dimension");
  require(result, cert.level2_rank == rank, "level2_rank");

  const std::string expected_variant = rank == 0   ? "NullLevelTwo"
                                       : rank == 1 ? "UniqueCandidateContradiction"
                                                   : "NoObstruction";
  require(result, cert.variant == expected_variant, "variant");
  if (cert.variant != expected_variant) return result;

  if (cert.variant == "NullLevelTwo") {
    // c = 2 ||L_{-2} vacuum||^2 and every level-2 norm is zero.
    require(result, cert.central_charge == 0, "central_charge");
    require(result, cert.positivity_side_condition, "positivity_side_condition");
    return result;
  }

  if (cert.variant == "UniqueCandidateContradiction") {
    const StructureConstants constants{cert.degree, Rational(0)};
    const FockVector generator = basis_vector(PartitionState{2});
    const Rational generator_norm = inner_product(generator, generator, constants);
    require(result, cert.gamma_relation == gamma_relation_text(2 * generator_norm),
            "gamma_relation");
    require(result,
            cert.central_charge_u == GammaPolynomial{0, 2 * generator_norm},
            "central_charge_u");
    require(result, !cert.checks.empty(), "checks");
    for (std::size_t i = 0; i < cert.checks.size(); ++i) {
      verify_check(result, cert, i);
    }
    return result;
  }

  // NoObstruction carries no further numeric claims beyond d2 >= 2.
  require(result, rank >= 2, "level2_rank");
  return result;
}

}  // namespace phin
