#include "phin/exact_linalg.hpp"

#include <stdexcept>
#include <utility>

namespace phin {

bool RationalMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = r + 1; c < cols; ++c)
      if (at(r, c) != at(c, r)) return false;
  return true;
}

std::size_t bareiss_rank(const RationalMatrix& matrix) {
  const std::size_t rows = matrix.rows;
  const std::size_t cols = matrix.cols;
  if (rows == 0 || cols == 0) return 0;

  // Scale each row by the lcm of its denominators; row scaling preserves rank.
  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    Integer scale = 1;
    for (std::size_t c = 0; c < cols; ++c) {
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(),
              matrix.at(r, c).get_den().get_mpz_t());
    }
    for (std::size_t c = 0; c < cols; ++c) {
      Rational scaled = matrix.at(r, c) * Rational(scale);
      a[r][c] = scaled.get_num();  // denominator is 1 after scaling
    }
  }

  Integer previous_pivot = 1;
  std::size_t rank = 0;
  const std::size_t steps = rows < cols ? rows : cols;
  for (std::size_t k = 0; k < steps; ++k) {
    // Complete pivot search over the trailing submatrix.
    std::size_t pivot_row = rows, pivot_col = cols;
    for (std::size_t r = k; r < rows && pivot_row == rows; ++r)
      for (std::size_t c = k; c < cols; ++c)
        if (a[r][c] != 0) {
          pivot_row = r;
          pivot_col = c;
          break;
        }
    if (pivot_row == rows) break;  // trailing block entirely zero
    std::swap(a[k], a[pivot_row]);
    if (pivot_col != k)
      for (std::size_t r = 0; r < rows; ++r) std::swap(a[r][k], a[r][pivot_col]);

    for (std::size_t r = k + 1; r < rows; ++r) {
      for (std::size_t c = k + 1; c < cols; ++c) {
        Integer numerator = a[k][k] * a[r][c] - a[r][k] * a[k][c];
        mpz_divexact(a[r][c].get_mpz_t(), numerator.get_mpz_t(),
                     previous_pivot.get_mpz_t());
      }
      a[r][k] = 0;
    }
    previous_pivot = a[k][k];
    ++rank;
  }
  return rank;
}

namespace {

struct Rref {
  RationalMatrix reduced;
  std::vector<std::size_t> pivot_cols;
};

Rref reduced_row_echelon(RationalMatrix m) {
  Rref result;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows && m.at(pivot, col) == 0) ++pivot;
    if (pivot == m.rows) continue;
    if (pivot != row)
      for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(row, c), m.at(pivot, c));
    const Rational inv = 1 / m.at(row, col);
    for (std::size_t c = col; c < m.cols; ++c) m.at(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      const Rational factor = m.at(r, col);
      for (std::size_t c = col; c < m.cols; ++c) m.at(r, c) -= factor * m.at(row, c);
    }
    result.pivot_cols.push_back(col);
    ++row;
  }
  result.reduced = std::move(m);
  return result;
}

}  // namespace

std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& matrix) {
  Rref rref = reduced_row_echelon(matrix);
  if (rref.pivot_cols.size() != bareiss_rank(matrix)) {
    throw std::logic_error("kernel_basis: rank disagreement between eliminations");
  }
  std::vector<bool> is_pivot(matrix.cols, false);
  for (std::size_t col : rref.pivot_cols) is_pivot[col] = true;

  std::vector<std::vector<Rational>> kernel;
  for (std::size_t free_col = 0; free_col < matrix.cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rational> v(matrix.cols, Rational(0));
    v[free_col] = 1;
    for (std::size_t r = 0; r < rref.pivot_cols.size(); ++r) {
      v[rref.pivot_cols[r]] = -rref.reduced.at(r, free_col);
    }
    kernel.push_back(std::move(v));
  }
  return kernel;
}

SymmetricPivotResult symmetric_pivot_support(const RationalMatrix& matrix) {
  if (!matrix.is_symmetric()) {
    throw std::invalid_argument("symmetric_pivot_support: matrix must be symmetric");
  }
  const std::size_t n = matrix.rows;
  RationalMatrix s = matrix;  // Schur complement, updated in place
  std::vector<std::size_t> remaining;
  remaining.reserve(n);
  for (std::size_t i = 0; i < n; ++i) remaining.push_back(i);

  SymmetricPivotResult result;
  while (!remaining.empty()) {
    std::size_t chosen = n;
    for (std::size_t idx : remaining) {
      if (s.at(idx, idx) > 0) {
        chosen = idx;
        break;
      }
      if (s.at(idx, idx) < 0) {
        result.positive_semidefinite = false;
        return result;
      }
    }
    if (chosen == n) {
      // All remaining diagonal entries vanish; semi-definiteness then forces
      // the whole remaining block to vanish.
      for (std::size_t i : remaining)
        for (std::size_t j : remaining)
          if (s.at(i, j) != 0) {
            result.positive_semidefinite = false;
            return result;
          }
      return result;
    }

    const Rational pivot = s.at(chosen, chosen);
    result.support.push_back(chosen);
    result.pivots.push_back(pivot);
    std::vector<std::size_t> next;
    next.reserve(remaining.size() - 1);
    for (std::size_t idx : remaining)
      if (idx != chosen) next.push_back(idx);
    for (std::size_t i : next)
      for (std::size_t j : next) s.at(i, j) -= s.at(i, chosen) * s.at(chosen, j) / pivot;
    remaining = std::move(next);
  }
  return result;
}

}  // namespace phin
