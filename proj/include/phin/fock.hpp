#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "phin/algebra.hpp"
#include "phin/exact_linalg.hpp"
#include "phin/rational.hpp"

namespace phin {

// Weakly decreasing positive parts (m1 >= m2 >= ... >= 1), encoding the
// state a_{-m1} ... a_{-mk} |vac>. The empty partition is the vacuum.
using PartitionState = std::vector<int>;

int level_of(const PartitionState& state);

// All partitions of `level` in reverse-lexicographic order (largest first),
// e.g. level 2 -> [{2}, {1,1}]. Throws on negative level.
std::vector<PartitionState> level_basis(int level);

struct FockVector {
  std::map<PartitionState, Rational> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  void add_term(const PartitionState& state, const Rational& coefficient);

  // Common level of all stored states, std::nullopt when mixed.
  // The zero vector reports level 0.
  std::optional<int> homogeneous_level() const;

  FockVector& operator+=(const FockVector& other);
  FockVector& operator-=(const FockVector& other);
  FockVector& operator*=(const Rational& factor);

  friend bool operator==(const FockVector&, const FockVector&) = default;
};

FockVector operator+(FockVector lhs, const FockVector& rhs);
FockVector operator-(FockVector lhs, const FockVector& rhs);
FockVector operator*(FockVector v, const Rational& factor);

FockVector basis_vector(const PartitionState& state);

// Action of a_m on a state vector: creators (m < 0) prepend a part, a_0
// multiplies by the central value q, annihilators (m > 0) contract against
// matching parts with weight Pi(m). Shifts the level by -m.
FockVector apply_mode(int mode, const FockVector& v, const StructureConstants& constants);

// Gram pairing <u, v>: bilinear extension of vacuum expectation values of
// annihilator/creator words. Vanishes across different levels; <vac,vac> = 1.
Rational inner_product(const FockVector& u, const FockVector& v,
                       const StructureConstants& constants);

struct GramMatrix {
  int degree = 0;
  int level = 0;
  Rational zero_mode = 0;
  std::vector<PartitionState> basis;
  RationalMatrix entries;

  std::size_t dimension() const { return basis.size(); }

  friend bool operator==(const GramMatrix&, const GramMatrix&) = default;
};

// Entry (i,j) = <vac| a_{reverse(basis_i)} a_{-basis_j} |vac>, exact and
// symmetric. The parallel variant evaluates independent entries across
// OpenMP threads; the serial variant is the reference implementation and
// produces identical output.
GramMatrix gram_matrix(int degree, int level, const Rational& zero_mode = Rational(0));
GramMatrix gram_matrix_serial(int degree, int level, const Rational& zero_mode = Rational(0));

struct NullReport {
  int degree = 0;
  int level = 0;
  std::size_t dimension = 0;  // p(level), the raw basis count
  std::size_t rank = 0;
  std::vector<PartitionState> basis;
  std::vector<FockVector> null_basis;  // exact kernel of the Gram form
};

NullReport null_report(int degree, int level, const Rational& zero_mode = Rational(0));

// Rank of the level Gram form = number of partitions of `level` into parts
// all >= degree + 1.
std::size_t effective_multiplicity(int degree, int level);

// Global conformal generators L_k, k in {-1, 0, +1}, acting through
// L_k |vac> = 0 and [L_k, a_m] = (k*degree - m) a_{m+k} (the weight
// degree+1 primary transformation law). L_0 is the level grading. The sl(2)
// relations close exactly modulo null vectors; states with parts <= degree
// are null, and that is where the commutator defects land.
FockVector mobius_apply(int k, const FockVector& v, const StructureConstants& constants);

std::string to_string(const PartitionState& state);
std::string to_string(const FockVector& v);

}  // namespace phin
