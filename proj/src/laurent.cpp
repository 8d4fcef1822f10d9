#include "phin/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace phin {

void LaurentDiffOp::add_term(int z_power, int d_power, const Rational& coefficient) {
  if (coefficient == 0) return;
  const std::pair<int, int> key{z_power, d_power};
  auto [it, inserted] = terms.try_emplace(key, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms.erase(it);
  }
}

LaurentDiffOp& LaurentDiffOp::operator+=(const LaurentDiffOp& other) {
  for (const auto& [key, coefficient] : other.terms) {
    add_term(key.first, key.second, coefficient);
  }
  return *this;
}

LaurentDiffOp& LaurentDiffOp::operator-=(const LaurentDiffOp& other) {
  for (const auto& [key, coefficient] : other.terms) {
    add_term(key.first, key.second, -coefficient);
  }
  return *this;
}

LaurentDiffOp& LaurentDiffOp::operator*=(const Rational& factor) {
  if (factor == 0) {
    terms.clear();
    return *this;
  }
  for (auto& [key, coefficient] : terms) coefficient *= factor;
  return *this;
}

LaurentDiffOp operator+(LaurentDiffOp lhs, const LaurentDiffOp& rhs) {
  lhs += rhs;
  return lhs;
}

LaurentDiffOp operator-(LaurentDiffOp lhs, const LaurentDiffOp& rhs) {
  lhs -= rhs;
  return lhs;
}

LaurentDiffOp operator*(LaurentDiffOp op, const Rational& factor) {
  op *= factor;
  return op;
}

LaurentDiffOp z_power(int a) {
  LaurentDiffOp op;
  op.add_term(a, 0, 1);
  return op;
}

LaurentDiffOp d_power(int b) {
  if (b < 0) throw std::invalid_argument("d_power: exponent must be >= 0");
  LaurentDiffOp op;
  op.add_term(0, b, 1);
  return op;
}

LaurentDiffOp constant_op(const Rational& c) {
  LaurentDiffOp op;
  op.add_term(0, 0, c);
  return op;
}

namespace {

Integer binomial(int n, int k) {
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return result;
}

}  // namespace

LaurentDiffOp compose(const LaurentDiffOp& A, const LaurentDiffOp& B) {
  // z^{a1} D^{b1} z^{a2} D^{b2}: push D^{b1} through z^{a2} with the iterated
  // Leibniz rule D^b z^a = sum_k C(b,k) a(a-1)...(a-k+1) z^{a-k} D^{b-k},
  // which follows from D z^a = z^a D + a z^{a-1} by induction and holds for
  // negative a as well.
  LaurentDiffOp result;
  for (const auto& [left, c1] : A.terms) {
    const int a1 = left.first;
    const int b1 = left.second;
    for (const auto& [right, c2] : B.terms) {
      const int a2 = right.first;
      const int b2 = right.second;
      const Rational c = c1 * c2;
      for (int k = 0; k <= b1; ++k) {
        const Integer weight = binomial(b1, k) * falling_factorial(a2, k);
        if (weight == 0) continue;
        result.add_term(a1 + a2 - k, b1 - k + b2, c * Rational(weight));
      }
    }
  }
  return result;
}

std::map<int, Rational> apply_to_monomial(const LaurentDiffOp& op, int p) {
  std::map<int, Rational> result;
  for (const auto& [key, coefficient] : op.terms) {
    const int a = key.first;
    const int b = key.second;
    const Rational value = coefficient * Rational(falling_factorial(p, b));
    if (value == 0) continue;
    const int exponent = p - b + a;
    auto [it, inserted] = result.try_emplace(exponent, value);
    if (!inserted) {
      it->second += value;
      if (it->second == 0) result.erase(it);
    }
  }
  return result;
}

KernelIdentityReport kernel_identity_check(int degree) {
  if (degree < 1) throw std::invalid_argument("kernel_identity_check: degree must be >= 1");
  const int n = degree;
  KernelIdentityReport report;
  report.degree = n;

  const LaurentDiffOp d1 = d_power(1);
  auto chain = [&d1](int outer, int sandwich, int inner_d, int tail) {
    // z^{outer} D z^2 D z^{sandwich} D^{inner_d} z^{tail}
    LaurentDiffOp op = z_power(outer);
    op = compose(op, d1);
    op = compose(op, z_power(2));
    op = compose(op, d1);
    op = compose(op, z_power(sandwich));
    op = compose(op, d_power(inner_d));
    op = compose(op, z_power(tail));
    return op;
  };

  report.base_form = chain(-2 * n, 2 * n, 2 * n - 1, -2);
  report.base_holds = report.base_form == d_power(2 * n + 1);
  report.step_form = chain(-2 * (n + 1), 2 * (n + 1), 2 * n + 1, -2);
  report.step_holds = report.step_form == d_power(2 * n + 3);
  return report;
}

Rational residue_pairing(int p, int q, int order) {
  if (order < 0) throw std::invalid_argument("residue_pairing: order must be >= 0");
  if (p + q - order != -1) return 0;
  return Rational(falling_factorial(p, order));
}

Rational mode_commutator_via_kernel(int degree, int m, int m_prime) {
  if (degree < 0) {
    throw std::invalid_argument("mode_commutator_via_kernel: degree must be >= 0");
  }
  return residue_pairing(degree + m, degree + m_prime, 2 * degree + 1);
}

std::string to_string(const LaurentDiffOp& op) {
  if (op.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, coefficient] : op.terms) {
    if (!first) out << " + ";
    first = false;
    out << to_string(coefficient);
    if (key.first != 0) out << " * z^" << key.first;
    if (key.second != 0) out << " * D^" << key.second;
  }
  return out.str();
}

}  // namespace phin
