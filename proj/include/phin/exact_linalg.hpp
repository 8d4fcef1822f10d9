#pragma once

#include <cstddef>
#include <vector>

#include "phin/rational.hpp"

namespace phin {

struct RationalMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Rational> data;  // row-major

  RationalMatrix() = default;
  RationalMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

  Rational& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

  bool is_square() const { return rows == cols; }
  bool is_symmetric() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;
};

// Exact rank by fraction-free (Bareiss) elimination with complete pivoting.
// Rows are scaled to integers first; no rational division, no rounding.
std::size_t bareiss_rank(const RationalMatrix& matrix);

// Exact kernel basis via rational Gauss-Jordan reduction. Each returned
// vector v of length cols satisfies matrix * v = 0 exactly; the number of
// vectors is cols - rank.
std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& matrix);

// Symmetric elimination with diagonal pivoting on a symmetric matrix.
// On a positive semi-definite input the returned support indexes a maximal
// principal submatrix that is positive definite (its size equals the rank),
// pivots holds the successive Schur-complement pivots (all > 0, equal to
// ratios of leading principal minors of the support submatrix), and
// positive_semidefinite is the exact verdict for the whole matrix.
struct SymmetricPivotResult {
  std::vector<std::size_t> support;
  std::vector<Rational> pivots;
  bool positive_semidefinite = true;
};

SymmetricPivotResult symmetric_pivot_support(const RationalMatrix& matrix);

}  // namespace phin
