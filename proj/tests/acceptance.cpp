// Acceptance gate: every release-blocking claim of the library, each checked
// at its stated tolerance and wall-clock budget. One PASS/FAIL line per
// criterion; the process exits nonzero if any line fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <boost/math/constants/constants.hpp>

#include "phin/bounds.hpp"
#include "phin/certify.hpp"
#include "phin/characters.hpp"
#include "phin/fock.hpp"
#include "phin/laurent.hpp"

namespace {

using phin::BigFloat;
using phin::Rational;

int failures = 0;

template <typename Check>
void criterion(int number, const std::string& title, double budget_seconds,
               Check&& check) {
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string detail;
  try {
    ok = check();
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string(" [exception: ") + e.what() + "]";
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_budget = elapsed < budget_seconds;
  const bool pass = ok && in_budget;
  if (!pass) ++failures;
  std::printf("%s  criterion %2d: %s (%.2fs, budget %.0fs)%s%s\n",
              pass ? "PASS" : "FAIL", number, title.c_str(), elapsed, budget_seconds,
              in_budget ? "" : " [over budget]", detail.c_str());
  std::fflush(stdout);
}

// ---------------------------------------------------------------------------

bool mode_relation_equivalence() {
  for (int degree = 0; degree <= 4; ++degree) {
    for (int m = -10; m <= 10; ++m) {
      for (int mp = -10; mp <= 10; ++mp) {
        const Rational via_kernel = phin::mode_commutator_via_kernel(degree, m, mp);
        const Rational direct =
            m + mp == 0 ? phin::structure_pi(degree, m) : Rational(0);
        if (via_kernel != direct) return false;
      }
    }
  }
  return true;
}

bool kernel_identities() {
  for (int degree = 1; degree <= 10; ++degree) {
    const phin::KernelIdentityReport report = phin::kernel_identity_check(degree);
    if (!report.base_holds || !report.step_holds) return false;
  }
  return true;
}

bool null_levels() {
  for (int degree = 1; degree <= 4; ++degree) {
    for (int level = 1; level <= degree; ++level) {
      if (phin::null_report(degree, level).rank != 0) return false;
    }
  }
  const phin::GramMatrix gram = phin::gram_matrix(1, 2);
  if (gram.entries.at(0, 0) != 6 || gram.entries.at(0, 1) != 0 ||
      gram.entries.at(1, 0) != 0 || gram.entries.at(1, 1) != 0) {
    return false;
  }
  return phin::null_report(1, 2).rank == 1;
}

bool multiplicity_law() {
  for (int degree = 0; degree <= 3; ++degree) {
    const phin::CharacterSeries series = phin::reduced_character(degree, 12);
    for (int level = 0; level <= 12; ++level) {
      const std::size_t rank = phin::effective_multiplicity(degree, level);
      if (phin::Integer(static_cast<long>(rank)) != series.coefficients[level]) {
        return false;
      }
    }
  }
  return true;
}

bool certificates() {
  for (int degree = 2; degree <= 6; ++degree) {
    const phin::Certificate certificate = phin::certify(degree);
    if (certificate.variant != "NullLevelTwo") return false;
    if (!phin::verify_certificate(certificate).ok) return false;
  }
  const phin::Certificate contradiction = phin::certify(1);
  if (contradiction.variant != "UniqueCandidateContradiction") return false;
  if (contradiction.gamma_relation != "c|gamma|^2 = 12") return false;
  if (contradiction.checks.empty()) return false;
  const phin::GammaPolynomial gap = contradiction.checks.front().mismatch;
  if (gap.u_coefficient != 0 || gap.constant != 48) return false;
  if (!phin::verify_certificate(contradiction).ok) return false;

  const phin::Certificate unobstructed = phin::certify(0);
  if (unobstructed.variant != "NoObstruction") return false;
  if (unobstructed.level2_rank != 2) return false;
  return phin::verify_certificate(unobstructed).ok;
}

bool energy_bound_ladder_and_eigen() {
  for (int degree = 0; degree <= 3; ++degree) {
    for (int mode = 1; mode <= 8; ++mode) {
      for (int level = 0; level <= 8; ++level) {
        for (const auto& partition : phin::level_basis(level)) {
          if (phin::ladder_defect(degree, mode, phin::basis_vector(partition)) != 0) {
            return false;
          }
        }
        if (!phin::annihilator_bound_check(degree, mode, level, 1e-9).pass) return false;
        if (!phin::creator_bound_check(degree, mode, level, 1e-9).pass) return false;
      }
    }
  }
  return true;
}

bool smeared_energy_bound() {
  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> degree_dist(0, 3);
  std::uniform_int_distribution<int> level_dist(0, 8);
  std::uniform_int_distribution<int> mode_dist(-4, 4);
  std::uniform_int_distribution<int> numerator_dist(-6, 6);
  std::uniform_int_distribution<int> denominator_dist(1, 5);

  for (int trial = 0; trial < 100; ++trial) {
    // random state: one to three homogeneous components up to level 8
    phin::FockVector state;
    const int terms = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < terms; ++t) {
      int remaining = level_dist(rng);
      phin::PartitionState partition;
      while (remaining > 0) {
        std::uniform_int_distribution<int> part_dist(1, remaining);
        const int part = part_dist(rng);
        partition.push_back(part);
        remaining -= part;
      }
      std::sort(partition.begin(), partition.end(), std::greater<int>());
      int numerator = numerator_dist(rng);
      if (numerator == 0) numerator = 2;
      state.add_term(partition, phin::make_rational(numerator, denominator_dist(rng)));
    }
    if (state.is_zero()) state.add_term(phin::PartitionState{}, 1);

    // random finitely supported f with at least one nonzero coefficient
    phin::SmearedFunction f;
    const int support = 1 + static_cast<int>(rng() % 4);
    for (int s = 0; s < support; ++s) {
      phin::ComplexRational value;
      value.re = phin::make_rational(numerator_dist(rng), denominator_dist(rng));
      value.im = phin::make_rational(numerator_dist(rng), denominator_dist(rng));
      if (value.is_zero()) value.re = 1;
      f.coefficients[mode_dist(rng)] = value;
    }

    const phin::BoundReport report =
        phin::smeared_bound_check(degree_dist(rng), f, state, Rational(0), 12, 1e-9);
    if (!report.pass) return false;
  }
  return true;
}

bool eta_modular_law() {
  phin::set_float_precision(30);
  const BigFloat pi_value = boost::math::constants::pi<BigFloat>();
  const std::vector<BigFloat> betas = {BigFloat("0.5"), BigFloat(1), BigFloat(2),
                                       pi_value, BigFloat(4), BigFloat(5)};
  for (const BigFloat& beta : betas) {
    if (!(phin::modular_residual(beta, 30) < BigFloat("1e-10"))) return false;
  }
  return true;
}

bool nuclearity_probe_verdicts() {
  const auto grid = phin::log_spaced_grid(BigFloat("0.5"), BigFloat("0.02"), 25);
  const phin::NuclearityTable strong =
      phin::nuclearity_probe(BigFloat("1.70"), 1, grid, 30);
  if (strong.verdict != "decreasing-to-zero") return false;
  const phin::NuclearityTable weak =
      phin::nuclearity_probe(BigFloat("1.60"), 1, grid, 30);
  if (weak.verdict != "diverging") return false;
  // The threshold discrepancy must be surfaced as an open question in the
  // report itself, never as a failure of either run.
  return strong.threshold_note.find("open question") != std::string::npos &&
         weak.threshold_note.find("open question") != std::string::npos;
}

bool sl2_structure() {
  for (int degree = 0; degree <= 3; ++degree) {
    const phin::StructureConstants constants{degree, Rational(0)};
    for (int level = 0; level <= 8; ++level) {
      const auto basis = phin::level_basis(level);
      for (const auto& partition : basis) {
        const phin::FockVector state = phin::basis_vector(partition);
        const phin::FockVector defect =
            phin::mobius_apply(1, phin::mobius_apply(-1, state, constants), constants) -
            phin::mobius_apply(-1, phin::mobius_apply(1, state, constants), constants) -
            phin::mobius_apply(0, state, constants) * Rational(2);
        if (degree == 0) {
          if (!defect.is_zero()) return false;
        } else {
          // equality as operators on the Hilbert space: the defect must be
          // null, i.e. orthogonal to the whole level including itself
          if (phin::inner_product(defect, defect, constants) != 0) return false;
          for (const auto& other : basis) {
            if (phin::inner_product(phin::basis_vector(other), defect, constants) != 0) {
              return false;
            }
          }
        }
      }
      // adjointness <L_1 u, v> = <u, L_{-1} v> across adjacent levels
      if (level >= 1) {
        for (const auto& upper : basis) {
          const phin::FockVector u = phin::basis_vector(upper);
          const phin::FockVector lowered = phin::mobius_apply(1, u, constants);
          for (const auto& lower : phin::level_basis(level - 1)) {
            const phin::FockVector v = phin::basis_vector(lower);
            const phin::FockVector raised = phin::mobius_apply(-1, v, constants);
            if (phin::inner_product(lowered, v, constants) !=
                phin::inner_product(u, raised, constants)) {
              return false;
            }
          }
        }
      }
    }
  }
  return true;
}

}  // namespace

int main() {
  std::printf("acceptance suite\n");
  criterion(1, "mode commutators via the kernel route equal delta * Pi (n <= 4, |m| <= 10)",
            1.0, mode_relation_equivalence);
  criterion(2, "differential kernel identities hold for degrees 1..10", 1.0,
            kernel_identities);
  criterion(3, "levels 1..n collapse and the (1,2) gram is [[6,0],[0,0]] with rank 1",
            5.0, null_levels);
  criterion(4, "effective multiplicities equal partitions into parts > n (n <= 3, N <= 12)",
            60.0, multiplicity_law);
  criterion(5, "no-stress-tensor certificates for n = 0..6 verify with the gamma-free gap 48",
            5.0, certificates);
  criterion(6, "exact ladder identity and eigenvalue bounds on the full grid (n <= 3, m, N <= 8)",
            120.0, energy_bound_ladder_and_eigen);
  criterion(7, "smeared energy bound on 100 randomized functions and states", 60.0,
            smeared_energy_bound);
  criterion(8, "eta modular residual < 1e-10 at 30-digit precision", 5.0,
            eta_modular_law);
  criterion(9, "nuclearity probe: decay at 1.70, divergence at 1.60, threshold open question",
            5.0, nuclearity_probe_verdicts);
  criterion(10, "sl(2) bracket and adjointness on all states up to level 8 (n <= 3)", 30.0,
            sl2_structure);

  if (failures == 0) {
    std::printf("acceptance: all criteria pass\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", failures);
  return 1;
}
