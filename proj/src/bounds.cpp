#include "phin/bounds.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "phin/exact_linalg.hpp"

namespace phin {

bool satisfies_reality(const SmearedFunction& f) {
  for (const auto& [mode, value] : f.coefficients) {
    ComplexRational mirror;
    auto it = f.coefficients.find(-mode);
    if (it != f.coefficients.end()) mirror = it->second;
    if (mirror.re != value.re || mirror.im != -value.im) return false;
  }
  return true;
}

Rational ladder_defect(int degree, int mode, const FockVector& state) {
  if (mode < 0) throw std::invalid_argument("ladder_defect: mode must be >= 0");
  const StructureConstants constants{degree, Rational(0)};
  const FockVector up = apply_mode(-mode, state, constants);
  const FockVector down = apply_mode(mode, state, constants);
  return inner_product(up, up, constants) - inner_product(down, down, constants) -
         structure_pi(degree, mode) * inner_product(state, state, constants);
}

namespace {

struct EigenSummary {
  BigFloat max_value = 0;
  BigFloat min_value = 0;
  std::size_t dimension = 0;
};

// Largest generalized eigenvalue of (M, G) restricted to the positive-pivot
// support of G. The support spans a complement of the Gram kernel, and M
// vanishes on that kernel (Cauchy-Schwarz for the vacuum form), so the
// restricted maximum is the quotient-space maximum.
EigenSummary restricted_max_eigenvalue(const RationalMatrix& numerator,
                                       const RationalMatrix& gram) {
  const SymmetricPivotResult pivot = symmetric_pivot_support(gram);
  if (!pivot.positive_semidefinite) {
    throw std::logic_error("restricted_max_eigenvalue: Gram form is not positive semi-definite");
  }
  EigenSummary summary;
  summary.dimension = pivot.support.size();
  if (pivot.support.empty()) return summary;

  const auto size = static_cast<Eigen::Index>(pivot.support.size());
  Eigen::MatrixXd m(size, size);
  Eigen::MatrixXd g(size, size);
  for (Eigen::Index i = 0; i < size; ++i) {
    for (Eigen::Index j = 0; j < size; ++j) {
      m(i, j) = to_double(numerator.at(pivot.support[i], pivot.support[j]));
      g(i, j) = to_double(gram.at(pivot.support[i], pivot.support[j]));
    }
  }
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      m, g, Eigen::EigenvaluesOnly | Eigen::Ax_lBx);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("restricted_max_eigenvalue: eigensolver failed");
  }
  summary.min_value = BigFloat(solver.eigenvalues()(0));
  summary.max_value = BigFloat(solver.eigenvalues()(size - 1));
  return summary;
}

RationalMatrix image_gram(const std::vector<FockVector>& images,
                          const StructureConstants& constants) {
  const std::size_t dim = images.size();
  RationalMatrix m(dim, dim);
  const long total = static_cast<long>(dim * dim);
#pragma omp parallel for schedule(dynamic, 8)
  for (long index = 0; index < total; ++index) {
    const std::size_t i = static_cast<std::size_t>(index) / dim;
    const std::size_t j = static_cast<std::size_t>(index) % dim;
    m.at(i, j) = inner_product(images[i], images[j], constants);
  }
  return m;
}

BoundReport mode_bound_check(int degree, int mode, int level, bool creator,
                             double tolerance) {
  if (mode < 1) throw std::invalid_argument("bound check: mode must be >= 1");
  if (level < 0) throw std::invalid_argument("bound check: level must be >= 0");
  const StructureConstants constants{degree, Rational(0)};
  const GramMatrix gram = gram_matrix(degree, level);

  std::vector<FockVector> images;
  images.reserve(gram.basis.size());
  const int acting_mode = creator ? -mode : mode;
  for (const auto& state : gram.basis) {
    images.push_back(apply_mode(acting_mode, basis_vector(state), constants));
  }
  const RationalMatrix numerator = image_gram(images, constants);
  const EigenSummary summary = restricted_max_eigenvalue(numerator, gram.entries);

  BoundReport report;
  report.kind = creator ? "creator" : "annihilator";
  report.degree = degree;
  report.mode = mode;
  report.level = level;
  report.effective_dimension = summary.dimension;
  report.observed = summary.max_value;
  report.min_eigenvalue = summary.min_value;
  report.bound_exact =
      Rational(creator ? level + mode : level) * structure_pi_prime(degree, mode);
  report.bound_is_exact = true;
  report.bound = to_bigfloat(report.bound_exact);
  report.tolerance = tolerance;
  report.pass = report.observed <= report.bound * (BigFloat(1) + BigFloat(tolerance));
  if (summary.dimension == 0) report.note = "empty effective space; bound holds trivially";
  return report;
}

}  // namespace

BoundReport annihilator_bound_check(int degree, int mode, int level, double tolerance) {
  return mode_bound_check(degree, mode, level, false, tolerance);
}

BoundReport creator_bound_check(int degree, int mode, int level, double tolerance) {
  // Replay the exact ladder identity on every basis state first; the numeric
  // maximization below is only meaningful if the identity holds on the nose.
  for (const auto& state : level_basis(level)) {
    if (ladder_defect(degree, mode, basis_vector(state)) != 0) {
      throw std::logic_error("creator_bound_check: ladder identity violated on " +
                             to_string(state));
    }
  }
  return mode_bound_check(degree, mode, level, true, tolerance);
}

BoundReport smeared_bound_check(int degree, const SmearedFunction& f,
                                const FockVector& state, const Rational& zero_mode,
                                int max_level, double tolerance) {
  const StructureConstants constants{degree, zero_mode};

  int state_level = 0;
  for (const auto& [partition, coefficient] : state.coeffs) {
    state_level = std::max(state_level, level_of(partition));
  }
  if (state_level > max_level) {
    throw std::runtime_error("smeared_bound_check: state exceeds the configured max level");
  }
  for (const auto& [mode, value] : f.coefficients) {
    if (value.is_zero() || mode >= 0) continue;
    if (state_level - mode > max_level) {
      std::ostringstream message;
      message << "smeared_bound_check: creator a[" << mode << "] pushes level "
              << state_level << " past the configured max level " << max_level;
      throw std::runtime_error(message.str());
    }
  }

  FockVector real_part;
  FockVector imag_part;
  for (const auto& [mode, value] : f.coefficients) {
    if (value.is_zero()) continue;
    const FockVector image = apply_mode(mode, state, constants);
    real_part += image * value.re;
    imag_part += image * value.im;
  }
  const Rational lhs_squared = inner_product(real_part, real_part, constants) +
                               inner_product(imag_part, imag_part, constants);

  const FockVector energy_shifted = mobius_apply(0, state, constants) + state;
  const Rational energy_norm_squared =
      inner_product(energy_shifted, energy_shifted, constants);

  BigFloat factor_sum = 0;
  for (const auto& [mode, value] : f.coefficients) {
    if (value.is_zero()) continue;
    Rational weight = Rational(mode < 0 ? -mode : mode) + abs(zero_mode) + 1;
    if (mode != 0) weight += structure_pi_prime(degree, mode);
    factor_sum += sqrt(to_bigfloat(value.abs_squared())) * to_bigfloat(weight);
  }

  BoundReport report;
  report.kind = "smeared";
  report.degree = degree;
  report.mode = 0;
  report.level = state_level;
  report.observed = sqrt(to_bigfloat(lhs_squared));
  report.bound = sqrt(to_bigfloat(energy_norm_squared)) * factor_sum;
  report.bound_is_exact = false;
  report.tolerance = tolerance;
  report.pass = report.observed <= report.bound * (BigFloat(1) + BigFloat(tolerance));
  std::ostringstream note;
  note << "support " << f.coefficients.size() << " modes; exact |lhs|^2 = "
       << to_string(lhs_squared);
  report.note = note.str();
  return report;
}

}  // namespace phin
