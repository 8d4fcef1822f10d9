#include "phin/algebra.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace phin {

Rational structure_pi(int degree, int mode) {
  if (degree < 0) throw std::invalid_argument("structure_pi: degree must be >= 0");
  Integer product = 1;
  for (int k = 0; k <= 2 * degree; ++k) product *= Integer(mode - degree + k);
  return Rational(product);
}

Rational structure_pi_prime(int degree, int mode) {
  if (mode == 0) throw std::invalid_argument("structure_pi_prime: mode must be nonzero");
  Rational value = structure_pi(degree, mode);
  return value / Rational(mode);
}

void AlgebraElement::add_term(const Word& word, const Rational& coefficient) {
  if (coefficient == 0) return;
  if (word.empty()) {
    scalar += coefficient;
    return;
  }
  auto [it, inserted] = words.try_emplace(word, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) words.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  for (const auto& [word, coefficient] : other.words) add_term(word, coefficient);
  scalar += other.scalar;
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
  for (const auto& [word, coefficient] : other.words) add_term(word, -coefficient);
  scalar -= other.scalar;
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& factor) {
  if (factor == 0) {
    words.clear();
    scalar = 0;
    return *this;
  }
  for (auto& [word, coefficient] : words) coefficient *= factor;
  scalar *= factor;
  return *this;
}

AlgebraElement operator+(AlgebraElement lhs, const AlgebraElement& rhs) {
  lhs += rhs;
  return lhs;
}

AlgebraElement operator-(AlgebraElement lhs, const AlgebraElement& rhs) {
  lhs -= rhs;
  return lhs;
}

AlgebraElement operator*(AlgebraElement element, const Rational& factor) {
  element *= factor;
  return element;
}

AlgebraElement mode_symbol(int mode) {
  AlgebraElement element;
  element.add_term(Word{mode}, 1);
  return element;
}

namespace {

// Memoized rewriting engine. A word is reduced by locating its leftmost
// defect: a zero index (resolved to the central value q), an
// annihilator-creator adjacency (swapped, emitting delta_{x,-y} Pi(x) times
// the contracted word), or an unsorted same-sign adjacency (swapped freely,
// since [a_x, a_y] = 0 unless x = -y). Identical subwords reached along
// different rewriting paths are computed once, which keeps the collapse of
// long annihilator/creator words polynomial.
class NormalOrderer {
 public:
  explicit NormalOrderer(const StructureConstants& constants) : constants_(constants) {}

  const AlgebraElement& order(const Word& word) {
    auto it = memo_.find(word);
    if (it != memo_.end()) return it->second;
    AlgebraElement result = reduce(word);
    return memo_.emplace(word, std::move(result)).first->second;
  }

 private:
  AlgebraElement reduce(const Word& word) {
    for (std::size_t i = 0; i < word.size(); ++i) {
      if (word[i] == 0) {
        Word rest;
        rest.reserve(word.size() - 1);
        rest.insert(rest.end(), word.begin(), word.begin() + i);
        rest.insert(rest.end(), word.begin() + i + 1, word.end());
        AlgebraElement result = order(rest);
        result *= constants_.zero_mode;
        return result;
      }
    }
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
      const int x = word[i];
      const int y = word[i + 1];
      const bool annihilator_before_creator = x > 0 && y < 0;
      const bool same_sign_unsorted = ((x > 0) == (y > 0)) && x > y;
      if (!annihilator_before_creator && !same_sign_unsorted) continue;

      Word swapped = word;
      std::swap(swapped[i], swapped[i + 1]);
      AlgebraElement result = order(swapped);
      if (x == -y) {
        Word contracted;
        contracted.reserve(word.size() - 2);
        contracted.insert(contracted.end(), word.begin(), word.begin() + i);
        contracted.insert(contracted.end(), word.begin() + i + 2, word.end());
        AlgebraElement delta_part = order(contracted);
        delta_part *= structure_pi(constants_.degree, x);
        result += delta_part;
      }
      return result;
    }
    // Already normal ordered.
    AlgebraElement result;
    if (word.empty()) {
      result.scalar = 1;
    } else {
      result.add_term(word, 1);
    }
    return result;
  }

  const StructureConstants& constants_;
  std::map<Word, AlgebraElement> memo_;
};

}  // namespace

AlgebraElement normal_order(const Word& word, const StructureConstants& constants) {
  NormalOrderer orderer(constants);
  return orderer.order(word);
}

AlgebraElement normal_order(const AlgebraElement& element, const StructureConstants& constants) {
  NormalOrderer orderer(constants);
  AlgebraElement result;
  for (const auto& [word, coefficient] : element.words) {
    AlgebraElement ordered = orderer.order(word);
    ordered *= coefficient;
    result += ordered;
  }
  result.scalar += element.scalar;
  return result;
}

AlgebraElement multiply(const AlgebraElement& lhs, const AlgebraElement& rhs,
                        const StructureConstants& constants) {
  NormalOrderer orderer(constants);
  AlgebraElement result;
  for (const auto& [left_word, left_coefficient] : lhs.words) {
    for (const auto& [right_word, right_coefficient] : rhs.words) {
      Word product = left_word;
      product.insert(product.end(), right_word.begin(), right_word.end());
      AlgebraElement ordered = orderer.order(product);
      ordered *= left_coefficient * right_coefficient;
      result += ordered;
    }
  }
  if (rhs.scalar != 0) {
    for (const auto& [word, coefficient] : lhs.words) {
      AlgebraElement ordered = orderer.order(word);
      ordered *= coefficient * rhs.scalar;
      result += ordered;
    }
  }
  if (lhs.scalar != 0) {
    for (const auto& [word, coefficient] : rhs.words) {
      AlgebraElement ordered = orderer.order(word);
      ordered *= coefficient * lhs.scalar;
      result += ordered;
    }
  }
  result.scalar += lhs.scalar * rhs.scalar;
  return result;
}

AlgebraElement commutator(const AlgebraElement& lhs, const AlgebraElement& rhs,
                          const StructureConstants& constants) {
  AlgebraElement result = multiply(lhs, rhs, constants);
  result -= multiply(rhs, lhs, constants);
  return result;
}

Rational vacuum_expectation(const Word& word, const StructureConstants& constants) {
  return normal_order(word, constants).scalar;
}

std::string to_string(const AlgebraElement& element) {
  if (element.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [word, coefficient] : element.words) {
    if (!first) out << " + ";
    first = false;
    out << to_string(coefficient) << " *";
    for (int mode : word) out << " a[" << mode << "]";
  }
  if (element.scalar != 0) {
    if (!first) out << " + ";
    out << to_string(element.scalar) << " * 1";
  }
  return out.str();
}

}  // namespace phin
