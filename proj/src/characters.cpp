#include "phin/characters.hpp"

#include <boost/math/constants/constants.hpp>

#include <sstream>
#include <stdexcept>

namespace phin {

std::vector<Integer> partition_series(int max_level) {
  if (max_level < 0) throw std::invalid_argument("partition_series: max_level must be >= 0");
  std::vector<Integer> p(static_cast<std::size_t>(max_level) + 1);
  p[0] = 1;
  for (int n = 1; n <= max_level; ++n) {
    Integer value = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      const int g2 = k * (3 * k + 1) / 2;
      if (g1 > n) break;
      Integer term = p[n - g1];
      if (g2 <= n) term += p[n - g2];
      if (k % 2 == 1) {
        value += term;
      } else {
        value -= term;
      }
    }
    p[n] = value;
  }
  return p;
}

CharacterSeries reduced_character(int degree, int max_level) {
  if (degree < 0) throw std::invalid_argument("reduced_character: degree must be >= 0");
  if (max_level < 0) throw std::invalid_argument("reduced_character: max_level must be >= 0");
  CharacterSeries series;
  series.degree = degree;
  series.cutoff = max_level;
  series.coefficients.assign(static_cast<std::size_t>(max_level) + 1, Integer(0));
  series.coefficients[0] = 1;
  // Restricted-partition DP: admit parts degree+1, degree+2, ... one at a time.
  for (int part = degree + 1; part <= max_level; ++part) {
    for (int n = part; n <= max_level; ++n) {
      series.coefficients[n] += series.coefficients[n - part];
    }
  }
  return series;
}

namespace {

// Temporarily raises the thread's default BigFloat precision; values created
// inside keep their own precision after the guard is gone.
struct PrecisionGuard {
  unsigned saved;
  explicit PrecisionGuard(unsigned digits) : saved(float_precision()) {
    set_float_precision(digits);
  }
  ~PrecisionGuard() { set_float_precision(saved); }
};

// log prod_{m>=1} (1 - x^m) truncated so the dropped tail is below eps in
// absolute value; the tail obeys |sum_{m>M} log(1-x^m)| <= x^{M+1}/(1-x)^2.
BigFloat log_euler_product(const BigFloat& x, const BigFloat& eps) {
  if (x <= 0 || x >= 1) throw std::invalid_argument("log_euler_product: need 0 < x < 1");
  const BigFloat tail_scale = 1 / ((1 - x) * (1 - x));
  BigFloat log_sum = 0;
  BigFloat power = 1;
  for (long m = 1; m <= 4000000; ++m) {
    power *= x;
    log_sum += log1p(-power);
    if (power * x * tail_scale < eps) return log_sum;
  }
  throw std::runtime_error("log_euler_product: truncation did not converge");
}

BigFloat pow10(long exponent) {
  return pow(BigFloat(10), exponent);
}

}  // namespace

EtaValue eta(const BigFloat& beta, unsigned digits) {
  if (beta <= 0) throw std::invalid_argument("eta: beta must be > 0");
  PrecisionGuard guard(digits + 10);
  const BigFloat b = beta;  // re-home at working precision
  const BigFloat x = exp(-b);
  const BigFloat eps = pow10(-static_cast<long>(digits) - 5);
  const BigFloat log_product = log_euler_product(x, eps);

  EtaValue result;
  result.beta = b;
  result.value = exp(-b / 24 + log_product);
  // The dropped factors multiply the value by e^{t} with |t| <= eps.
  result.tail_bound = result.value * expm1(eps);
  return result;
}

BigFloat modular_residual(const BigFloat& beta, unsigned digits) {
  if (beta <= 0) throw std::invalid_argument("modular_residual: beta must be > 0");
  PrecisionGuard guard(digits + 10);
  const BigFloat pi = boost::math::constants::pi<BigFloat>();
  const BigFloat b = beta;
  const BigFloat lhs = sqrt(b / (2 * pi)) * eta(b, digits).value;
  const BigFloat rhs = eta(4 * pi * pi / b, digits).value;
  return abs(lhs - rhs);
}

BigFloat log_partition_value(const BigFloat& beta, unsigned digits) {
  if (beta <= 0) throw std::invalid_argument("log_partition_value: beta must be > 0");
  PrecisionGuard guard(digits + 10);
  const BigFloat b = beta;
  const BigFloat eps = pow10(-static_cast<long>(digits) - 5);
  if (b >= BigFloat(1) / 2) {
    return -log_euler_product(exp(-b), eps);
  }
  // Small beta: route through the modular transform. With beta' = 4 pi^2/beta,
  //   log p = -beta/24 + (1/2) log(beta/2pi) + pi^2/(6 beta)
  //           - sum_m log(1 - e^{-beta' m}),
  // whose product converges immediately since beta' is large.
  const BigFloat pi = boost::math::constants::pi<BigFloat>();
  const BigFloat beta_dual = 4 * pi * pi / b;
  return -b / 24 + log(b / (2 * pi)) / 2 + pi * pi / (6 * b) -
         log_euler_product(exp(-beta_dual), eps);
}

NuclearityTable nuclearity_probe(const BigFloat& beta0, int exponent,
                                 const std::vector<BigFloat>& grid, unsigned digits) {
  if (beta0 <= 0) throw std::invalid_argument("nuclearity_probe: beta0 must be > 0");
  if (exponent < 1) throw std::invalid_argument("nuclearity_probe: exponent must be >= 1");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] <= 0) throw std::invalid_argument("nuclearity_probe: grid must be positive");
    if (i > 0 && grid[i] >= grid[i - 1]) {
      throw std::invalid_argument("nuclearity_probe: grid must be strictly decreasing");
    }
  }

  PrecisionGuard guard(digits + 10);
  NuclearityTable table;
  table.beta0 = beta0;
  table.exponent = exponent;
  table.digits = digits;
  table.threshold_note =
      "With exponent 1 the probe's empirical decay threshold for beta0 sits near "
      "pi^2/6 ~ 1.6449 (the growth rate of log p(e^{-beta}) ~ pi^2/(6 beta)), not at "
      "the weaker stated value -1 + pi^2/6 ~ 0.6449. Which constant is sharp for the "
      "nuclearity condition is recorded here as an open question, never as a failure.";

  for (const BigFloat& beta : grid) {
    NuclearityRow row;
    row.beta = beta;
    const BigFloat log_p = log_partition_value(beta, digits);
    row.partition_value = exp(log_p);
    row.log_probe = log_p - pow(beta0 / beta, exponent);
    row.probe_value = exp(row.log_probe);
    table.rows.push_back(row);
  }

  const std::size_t count = table.rows.size();
  if (count < 2) {
    table.verdict = "inconclusive";
    return table;
  }
  std::size_t tail = count / 3;
  if (tail < 3) tail = 3;
  if (tail > count) tail = count;
  bool decreasing = true;
  bool increasing = true;
  for (std::size_t i = count - tail + 1; i < count; ++i) {
    if (table.rows[i].log_probe >= table.rows[i - 1].log_probe) decreasing = false;
    if (table.rows[i].log_probe <= table.rows[i - 1].log_probe) increasing = false;
  }
  table.verdict = decreasing ? "decreasing-to-zero" : increasing ? "diverging" : "inconclusive";
  return table;
}

std::vector<BigFloat> log_spaced_grid(const BigFloat& start, const BigFloat& end,
                                      std::size_t points) {
  if (points < 2) throw std::invalid_argument("log_spaced_grid: need at least 2 points");
  if (start <= end || end <= 0) {
    throw std::invalid_argument("log_spaced_grid: need start > end > 0");
  }
  std::vector<BigFloat> grid;
  grid.reserve(points);
  const BigFloat log_start = log(start);
  const BigFloat log_end = log(end);
  for (std::size_t i = 0; i < points; ++i) {
    const BigFloat t = BigFloat(i) / BigFloat(points - 1);
    grid.push_back(exp(log_start + (log_end - log_start) * t));
  }
  return grid;
}

}  // namespace phin
