#include "phin/fock.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace phin {

int level_of(const PartitionState& state) {
  int level = 0;
  for (int part : state) level += part;
  return level;
}

namespace {

void enumerate_partitions(int remaining, int max_part, PartitionState& current,
                          std::vector<PartitionState>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    enumerate_partitions(remaining - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<PartitionState> level_basis(int level) {
  if (level < 0) throw std::invalid_argument("level_basis: level must be >= 0");
  std::vector<PartitionState> basis;
  PartitionState current;
  enumerate_partitions(level, level == 0 ? 1 : level, current, basis);
  return basis;
}

void FockVector::add_term(const PartitionState& state, const Rational& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = coeffs.try_emplace(state, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) coeffs.erase(it);
  }
}

std::optional<int> FockVector::homogeneous_level() const {
  if (coeffs.empty()) return 0;
  int level = level_of(coeffs.begin()->first);
  for (const auto& [state, coefficient] : coeffs) {
    if (level_of(state) != level) return std::nullopt;
  }
  return level;
}

FockVector& FockVector::operator+=(const FockVector& other) {
  for (const auto& [state, coefficient] : other.coeffs) add_term(state, coefficient);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& other) {
  for (const auto& [state, coefficient] : other.coeffs) add_term(state, -coefficient);
  return *this;
}

FockVector& FockVector::operator*=(const Rational& factor) {
  if (factor == 0) {
    coeffs.clear();
    return *this;
  }
  for (auto& [state, coefficient] : coeffs) coefficient *= factor;
  return *this;
}

FockVector operator+(FockVector lhs, const FockVector& rhs) {
  lhs += rhs;
  return lhs;
}

FockVector operator-(FockVector lhs, const FockVector& rhs) {
  lhs -= rhs;
  return lhs;
}

FockVector operator*(FockVector v, const Rational& factor) {
  v *= factor;
  return v;
}

FockVector basis_vector(const PartitionState& state) {
  FockVector v;
  v.add_term(state, 1);
  return v;
}

FockVector apply_mode(int mode, const FockVector& v, const StructureConstants& constants) {
  FockVector result;
  if (mode == 0) {
    result = v;
    result *= constants.zero_mode;
    return result;
  }
  if (mode < 0) {
    const int part = -mode;
    for (const auto& [state, coefficient] : v.coeffs) {
      PartitionState extended = state;
      extended.insert(std::upper_bound(extended.begin(), extended.end(), part,
                                       std::greater<int>()),
                      part);
      result.add_term(extended, coefficient);
    }
    return result;
  }
  // Annihilator: contract against each matching part. [a_m, a_{-p}] vanishes
  // unless p == m, so a_m picks up multiplicity * Pi(m) on the state with one
  // matching part removed and kills the vacuum remainder.
  const Rational pi = structure_pi(constants.degree, mode);
  if (pi == 0) return result;
  for (const auto& [state, coefficient] : v.coeffs) {
    auto range = std::equal_range(state.begin(), state.end(), mode, std::greater<int>());
    const auto multiplicity = range.second - range.first;
    if (multiplicity == 0) continue;
    PartitionState reduced = state;
    reduced.erase(reduced.begin() + (range.first - state.begin()));
    result.add_term(reduced, coefficient * pi * Rational(static_cast<long>(multiplicity)));
  }
  return result;
}

Rational inner_product(const FockVector& u, const FockVector& v,
                       const StructureConstants& constants) {
  Rational total = 0;
  for (const auto& [left, left_coefficient] : u.coeffs) {
    const int left_level = level_of(left);
    for (const auto& [right, right_coefficient] : v.coeffs) {
      if (level_of(right) != left_level) continue;
      Word word;
      word.reserve(left.size() + right.size());
      for (auto it = left.rbegin(); it != left.rend(); ++it) word.push_back(*it);
      for (int part : right) word.push_back(-part);
      total += left_coefficient * right_coefficient * vacuum_expectation(word, constants);
    }
  }
  return total;
}

namespace {

Rational gram_entry(const std::vector<PartitionState>& basis, std::size_t i, std::size_t j,
                    const StructureConstants& constants) {
  Word word;
  const PartitionState& left = basis[i];
  const PartitionState& right = basis[j];
  word.reserve(left.size() + right.size());
  for (auto it = left.rbegin(); it != left.rend(); ++it) word.push_back(*it);
  for (int part : right) word.push_back(-part);
  return vacuum_expectation(word, constants);
}

GramMatrix gram_assemble(int degree, int level, const Rational& zero_mode, bool parallel) {
  if (level < 0) throw std::invalid_argument("gram_matrix: level must be >= 0");
  GramMatrix gram;
  gram.degree = degree;
  gram.level = level;
  gram.zero_mode = zero_mode;
  gram.basis = level_basis(level);
  const std::size_t dim = gram.basis.size();
  gram.entries = RationalMatrix(dim, dim);
  const StructureConstants constants{degree, zero_mode};
  const long total = static_cast<long>(dim * dim);

  if (parallel) {
#pragma omp parallel for schedule(dynamic, 8)
    for (long index = 0; index < total; ++index) {
      const std::size_t i = static_cast<std::size_t>(index) / dim;
      const std::size_t j = static_cast<std::size_t>(index) % dim;
      gram.entries.at(i, j) = gram_entry(gram.basis, i, j, constants);
    }
  } else {
    for (long index = 0; index < total; ++index) {
      const std::size_t i = static_cast<std::size_t>(index) / dim;
      const std::size_t j = static_cast<std::size_t>(index) % dim;
      gram.entries.at(i, j) = gram_entry(gram.basis, i, j, constants);
    }
  }
  return gram;
}

}  // namespace

GramMatrix gram_matrix(int degree, int level, const Rational& zero_mode) {
  return gram_assemble(degree, level, zero_mode, true);
}

GramMatrix gram_matrix_serial(int degree, int level, const Rational& zero_mode) {
  return gram_assemble(degree, level, zero_mode, false);
}

NullReport null_report(int degree, int level, const Rational& zero_mode) {
  GramMatrix gram = gram_matrix(degree, level, zero_mode);
  NullReport report;
  report.degree = degree;
  report.level = level;
  report.basis = gram.basis;
  report.dimension = gram.dimension();
  report.rank = bareiss_rank(gram.entries);
  for (const auto& kernel_vector : kernel_basis(gram.entries)) {
    FockVector v;
    for (std::size_t i = 0; i < kernel_vector.size(); ++i) {
      v.add_term(gram.basis[i], kernel_vector[i]);
    }
    report.null_basis.push_back(std::move(v));
  }
  if (report.rank + report.null_basis.size() != report.dimension) {
    throw std::logic_error("null_report: rank/nullity mismatch");
  }
  return report;
}

std::size_t effective_multiplicity(int degree, int level) {
  return bareiss_rank(gram_matrix(degree, level).entries);
}

FockVector mobius_apply(int k, const FockVector& v, const StructureConstants& constants) {
  if (k < -1 || k > 1) {
    throw std::invalid_argument("mobius_apply: k must be in {-1, 0, +1}");
  }
  FockVector result;
  if (k == 0) {
    for (const auto& [state, coefficient] : v.coeffs) {
      result.add_term(state, coefficient * Rational(level_of(state)));
    }
    return result;
  }
  for (const auto& [state, coefficient] : v.coeffs) {
    // [L_k, a_{-p}] = (k*degree + p) a_{-(p-k)}; sum over one insertion per
    // distinct part value, weighted by multiplicity. L_k annihilates |vac>.
    std::size_t i = 0;
    while (i < state.size()) {
      std::size_t j = i;
      while (j < state.size() && state[j] == state[i]) ++j;
      const int part = state[i];
      const long multiplicity = static_cast<long>(j - i);
      const Rational factor =
          coefficient * Rational(k * constants.degree + part) * Rational(multiplicity);
      const int new_part = part - k;
      PartitionState modified = state;
      modified.erase(modified.begin() + i);
      if (new_part > 0) {
        modified.insert(std::upper_bound(modified.begin(), modified.end(), new_part,
                                         std::greater<int>()),
                        new_part);
        result.add_term(modified, factor);
      } else {
        // The part dropped to a_0, which contributes its central value.
        result.add_term(modified, factor * constants.zero_mode);
      }
      i = j;
    }
  }
  return result;
}

std::string to_string(const PartitionState& state) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < state.size(); ++i) {
    if (i > 0) out << ",";
    out << state[i];
  }
  out << "}";
  return out.str();
}

std::string to_string(const FockVector& v) {
  if (v.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [state, coefficient] : v.coeffs) {
    if (!first) out << " + ";
    first = false;
    out << to_string(coefficient) << " * " << to_string(state);
  }
  return out.str();
}

}  // namespace phin
