#pragma once

#include <string>
#include <vector>

#include "phin/bigfloat.hpp"
#include "phin/rational.hpp"

namespace phin {

// Exact partition numbers p(0) .. p(max_level) via the Euler pentagonal
// recurrence.
std::vector<Integer> partition_series(int max_level);

// Level multiplicities d_N of the degree-n model after removing null states:
// d_N = #{partitions of N into parts >= n+1}, the coefficient series of
// prod_{m >= n+1} (1 - x^m)^{-1}.
struct CharacterSeries {
  int degree = 0;
  int cutoff = 0;
  std::vector<Integer> coefficients;  // d_0 .. d_cutoff

  friend bool operator==(const CharacterSeries&, const CharacterSeries&) = default;
};

CharacterSeries reduced_character(int degree, int max_level);

// eta(i beta / 2 pi) = e^{-beta/24} prod_{m>=1} (1 - e^{-beta m}), evaluated
// with a certified truncation: tail_bound is an explicit absolute bound on
// the truncation error of value.
struct EtaValue {
  BigFloat beta = 0;
  BigFloat value = 0;
  BigFloat tail_bound = 0;
};

EtaValue eta(const BigFloat& beta, unsigned digits);

// |sqrt(beta/2pi) * eta(i beta/2pi) - eta(i 2pi/beta)|: the residual of the
// modular transformation law, which should vanish to working precision.
BigFloat modular_residual(const BigFloat& beta, unsigned digits);

// log of p(e^{-beta}) = sum_N p(N) e^{-beta N} = prod_{m>=1}(1-e^{-beta m})^{-1}.
// For beta < 1/2 the evaluation goes through the modular transform (the
// product at argument 4 pi^2 / beta), which converges fast exactly where the
// direct product does not.
BigFloat log_partition_value(const BigFloat& beta, unsigned digits);

// Nuclearity probe: samples f(beta) = p(e^{-beta}) * exp(-(beta0/beta)^exponent)
// on a decreasing grid and classifies the trend of the grid tail.
struct NuclearityRow {
  BigFloat beta = 0;
  BigFloat partition_value = 0;  // p(e^{-beta})
  BigFloat probe_value = 0;      // f(beta)
  BigFloat log_probe = 0;        // log f(beta)
};

struct NuclearityTable {
  BigFloat beta0 = 0;
  int exponent = 1;
  unsigned digits = 0;
  std::vector<NuclearityRow> rows;
  std::string verdict;  // "decreasing-to-zero" | "diverging" | "inconclusive"
  std::string threshold_note;
};

NuclearityTable nuclearity_probe(const BigFloat& beta0, int exponent,
                                 const std::vector<BigFloat>& grid, unsigned digits);

// Strictly decreasing log-spaced grid from start down to end (inclusive).
std::vector<BigFloat> log_spaced_grid(const BigFloat& start, const BigFloat& end,
                                      std::size_t points);

}  // namespace phin
