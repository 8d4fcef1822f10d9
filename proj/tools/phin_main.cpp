#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "phin/algebra.hpp"
#include "phin/bounds.hpp"
#include "phin/certify.hpp"
#include "phin/characters.hpp"
#include "phin/fock.hpp"
#include "phin/json_io.hpp"
#include "phin/laurent.hpp"
#include "phin/version.hpp"

namespace {

using phin::BigFloat;
using phin::Json;
using phin::Rational;

struct SharedConfig {
  std::string format = "table";  // json | table | csv
  unsigned precision = 30;
  double tolerance = 1e-9;
  std::string q_text = "0";

  Rational q() const { return phin::rational_from_string(q_text); }
};

Json shared_config_json(const SharedConfig& shared) {
  Json j;
  j["format"] = shared.format;
  j["precision"] = shared.precision;
  j["tolerance"] = shared.tolerance;
  j["q"] = shared.q_text;
  return j;
}

void emit_json(const std::string& command, const Json& config, const Json& report) {
  Json envelope;
  envelope["version"] = phin::VERSION;
  envelope["command"] = command;
  envelope["config"] = config;
  envelope["report"] = report;
  std::cout << envelope.dump(2) << "\n";
}

int run_pi(const SharedConfig& shared, int degree, int mode, bool prime) {
  const Rational value = prime ? phin::structure_pi_prime(degree, mode)
                               : phin::structure_pi(degree, mode);
  if (shared.format == "json") {
    Json config = shared_config_json(shared);
    config["degree"] = degree;
    config["mode"] = mode;
    config["prime"] = prime;
    Json report;
    report["value"] = phin::rational_to_json(value);
    emit_json("pi", config, report);
  } else {
    std::cout << phin::to_string(value) << "\n";
  }
  return 0;
}

int run_gram(const SharedConfig& shared, int degree, int level) {
  const phin::GramMatrix gram = phin::gram_matrix(degree, level, shared.q());
  if (shared.format == "json") {
    Json config = shared_config_json(shared);
    config["degree"] = degree;
    config["level"] = level;
    emit_json("gram", config, phin::gram_to_json(gram));
    return 0;
  }
  std::cout << "basis:";
  for (const auto& state : gram.basis) std::cout << " " << phin::to_string(state);
  std::cout << "\n";
  for (std::size_t r = 0; r < gram.entries.rows; ++r) {
    std::cout << "[";
    for (std::size_t c = 0; c < gram.entries.cols; ++c) {
      std::cout << " " << phin::to_string(gram.entries.at(r, c));
    }
    std::cout << " ]\n";
  }
  return 0;
}

int run_nulls(const SharedConfig& shared, int degree, int level) {
  const phin::NullReport report = phin::null_report(degree, level, shared.q());
  if (shared.format == "json") {
    Json config = shared_config_json(shared);
    config["degree"] = degree;
    config["level"] = level;
    emit_json("nulls", config, phin::null_report_to_json(report));
    return 0;
  }
  std::cout << "dimension: " << report.dimension << "\n";
  std::cout << "rank: " << report.rank << "\n";
  std::cout << "null basis:\n";
  for (const auto& v : report.null_basis) {
    std::cout << "  " << phin::to_string(v) << "\n";
  }
  return 0;
}

int run_character(const SharedConfig& shared, int degree, int max_level) {
  const phin::CharacterSeries series = phin::reduced_character(degree, max_level);
  if (shared.format == "json") {
    Json config = shared_config_json(shared);
    config["degree"] = degree;
    config["max_level"] = max_level;
    emit_json("character", config, phin::character_to_json(series));
    return 0;
  }
  if (shared.format == "csv") {
    std::cout << "N,d_N\n";
    for (std::size_t n = 0; n < series.coefficients.size(); ++n) {
      std::cout << n << "," << series.coefficients[n].get_str() << "\n";
    }
    return 0;
  }
  for (std::size_t n = 0; n < series.coefficients.size(); ++n) {
    if (n > 0) std::cout << " ";
    std::cout << series.coefficients[n].get_str();
  }
  std::cout << "\n";
  return 0;
}

struct BoundsOptions {
  int degree = 1;
  int mode = 0;       // 0 = sweep 1..max_mode
  int level = -1;     // -1 = sweep 0..max_level
  int max_mode = 8;
  int max_level = 8;
  std::string kind = "both";  // annihilator | creator | both
  int smeared = 0;            // > 0 = run that many randomized smeared checks
  unsigned seed = 12345;
};

phin::FockVector random_state(std::mt19937& rng, int max_level) {
  std::uniform_int_distribution<int> level_dist(0, max_level);
  std::uniform_int_distribution<int> coeff_dist(-4, 4);
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
    int numerator = coeff_dist(rng);
    if (numerator == 0) numerator = 1;
    state.add_term(partition, phin::make_rational(numerator, 1 + rng() % 3));
  }
  if (state.is_zero()) state.add_term(phin::PartitionState{}, 1);
  return state;
}

phin::SmearedFunction random_function(std::mt19937& rng) {
  std::uniform_int_distribution<int> mode_dist(-4, 4);
  std::uniform_int_distribution<int> num_dist(-5, 5);
  phin::SmearedFunction f;
  const int support = 1 + static_cast<int>(rng() % 4);
  for (int s = 0; s < support; ++s) {
    phin::ComplexRational value;
    value.re = phin::make_rational(num_dist(rng), 1 + rng() % 4);
    value.im = phin::make_rational(num_dist(rng), 1 + rng() % 4);
    f.coefficients[mode_dist(rng)] = value;
  }
  return f;
}

int run_bounds(const SharedConfig& shared, const BoundsOptions& options) {
  Json config = shared_config_json(shared);
  config["degree"] = options.degree;
  config["kind"] = options.kind;

  std::vector<phin::BoundReport> reports;
  if (options.smeared > 0) {
    config["smeared"] = options.smeared;
    config["seed"] = options.seed;
    config["max_level"] = options.max_level;
    std::mt19937 rng(options.seed);
    for (int i = 0; i < options.smeared; ++i) {
      const phin::FockVector state = random_state(rng, options.max_level);
      const phin::SmearedFunction f = random_function(rng);
      reports.push_back(phin::smeared_bound_check(options.degree, f, state, shared.q(),
                                                  options.max_level + 4,
                                                  shared.tolerance));
    }
  } else {
    const int mode_lo = options.mode > 0 ? options.mode : 1;
    const int mode_hi = options.mode > 0 ? options.mode : options.max_mode;
    const int level_lo = options.level >= 0 ? options.level : 0;
    const int level_hi = options.level >= 0 ? options.level : options.max_level;
    config["modes"] = {mode_lo, mode_hi};
    config["levels"] = {level_lo, level_hi};
    for (int m = mode_lo; m <= mode_hi; ++m) {
      for (int level = level_lo; level <= level_hi; ++level) {
        if (options.kind != "creator") {
          reports.push_back(
              phin::annihilator_bound_check(options.degree, m, level, shared.tolerance));
        }
        if (options.kind != "annihilator") {
          reports.push_back(
              phin::creator_bound_check(options.degree, m, level, shared.tolerance));
        }
      }
    }
  }

  bool all_pass = true;
  for (const auto& report : reports) all_pass = all_pass && report.pass;

  if (shared.format == "json") {
    Json rows = Json::array();
    for (const auto& report : reports) {
      rows.push_back(phin::bound_report_to_json(report, shared.precision));
    }
    Json payload;
    payload["reports"] = rows;
    payload["all_pass"] = all_pass;
    emit_json("bounds", config, payload);
  } else {
    std::cout << "kind degree mode level observed bound pass\n";
    for (const auto& report : reports) {
      std::cout << report.kind << " " << report.degree << " " << report.mode << " "
                << report.level << " " << phin::float_text(report.observed, shared.precision)
                << " " << phin::float_text(report.bound, shared.precision) << " "
                << (report.pass ? "pass" : "FAIL") << "\n";
    }
  }
  return all_pass ? 0 : 1;
}

int run_kernel_check(const SharedConfig& shared, int max_degree) {
  bool all_hold = true;
  std::vector<phin::KernelIdentityReport> reports;
  for (int n = 1; n <= max_degree; ++n) {
    reports.push_back(phin::kernel_identity_check(n));
    all_hold = all_hold && reports.back().base_holds && reports.back().step_holds;
  }
  if (shared.format == "json") {
    Json config = shared_config_json(shared);
    config["max_degree"] = max_degree;
    Json rows = Json::array();
    for (const auto& report : reports) {
      Json r;
      r["degree"] = report.degree;
      r["base_holds"] = report.base_holds;
      r["step_holds"] = report.step_holds;
      r["base_form"] = phin::to_string(report.base_form);
      r["step_form"] = phin::to_string(report.step_form);
      rows.push_back(r);
    }
    Json payload;
    payload["reports"] = rows;
    payload["all_hold"] = all_hold;
    emit_json("kernel-check", config, payload);
  } else {
    std::cout << "degree base step\n";
    for (const auto& report : reports) {
      std::cout << report.degree << " " << (report.base_holds ? "ok" : "FAIL") << " "
                << (report.step_holds ? "ok" : "FAIL") << "\n";
    }
  }
  return all_hold ? 0 : 1;
}

int run_nuclearity(const SharedConfig& shared, double beta0, int exponent,
                   double beta_start, double beta_end, std::size_t points) {
  const std::vector<BigFloat> grid =
      phin::log_spaced_grid(BigFloat(beta_start), BigFloat(beta_end), points);
  const phin::NuclearityTable table =
      phin::nuclearity_probe(BigFloat(beta0), exponent, grid, shared.precision);
  if (shared.format == "json") {
    Json config = shared_config_json(shared);
    config["beta0"] = beta0;
    config["exponent"] = exponent;
    config["beta_start"] = beta_start;
    config["beta_end"] = beta_end;
    config["points"] = points;
    emit_json("nuclearity", config, phin::nuclearity_to_json(table, shared.precision));
  } else if (shared.format == "csv") {
    std::cout << phin::nuclearity_to_csv(table, shared.precision);
  } else {
    std::cout << "beta p f log_f\n";
    for (const auto& row : table.rows) {
      std::cout << phin::float_text(row.beta, shared.precision) << " "
                << phin::float_text(row.partition_value, shared.precision) << " "
                << phin::float_text(row.probe_value, shared.precision) << " "
                << phin::float_text(row.log_probe, shared.precision) << "\n";
    }
    std::cout << "verdict: " << table.verdict << "\n";
    std::cout << "note: " << table.threshold_note << "\n";
  }
  return 0;
}

int run_certify(const SharedConfig& shared, int degree) {
  const phin::Certificate certificate = phin::certify(degree);
  if (shared.format == "json") {
    Json config = shared_config_json(shared);
    config["degree"] = degree;
    emit_json("certify", config, phin::certificate_to_json(certificate));
    return 0;
  }
  std::cout << "variant: " << certificate.variant << "\n";
  std::cout << "level-2 dimension: " << certificate.level2_dimension
            << ", rank: " << certificate.level2_rank << "\n";
  if (certificate.variant == "UniqueCandidateContradiction") {
    std::cout << "calibration: " << certificate.gamma_relation
              << "  (c = " << phin::to_string(certificate.central_charge_u) << ")\n";
    for (const auto& check : certificate.checks) {
      std::cout << "  [L_" << check.mode << ", L_" << -check.mode << "] on "
                << phin::to_string(check.witness)
                << ": required " << phin::to_string(check.required) << ", actual "
                << phin::to_string(check.actual) << ", mismatch "
                << phin::to_string(check.mismatch) << "\n";
    }
    std::cout << "inference: " << certificate.inference_note << "\n";
  }
  std::cout << "conclusion: " << certificate.conclusion << "\n";
  return 0;
}

int run_verify(const SharedConfig& shared, const std::string& input_path) {
  Json document;
  if (input_path == "-") {
    document = Json::parse(std::cin);
  } else {
    std::ifstream in(input_path);
    if (!in) throw std::invalid_argument("verify: cannot open '" + input_path + "'");
    document = Json::parse(in);
  }
  // Accept either a bare certificate or a full report envelope.
  const Json& body = document.contains("report") ? document.at("report") : document;
  const phin::Certificate certificate = phin::certificate_from_json(body);
  const phin::VerificationResult result = phin::verify_certificate(certificate);

  if (shared.format == "json") {
    Json config = shared_config_json(shared);
    config["input"] = input_path;
    Json payload;
    payload["ok"] = result.ok;
    Json failures = Json::array();
    for (const auto& field : result.failures) failures.push_back(field);
    payload["failures"] = failures;
    emit_json("verify", config, payload);
  } else {
    std::cout << (result.ok ? "ok" : "FAIL") << "\n";
    for (const auto& field : result.failures) std::cout << "  mismatch: " << field << "\n";
  }
  return result.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact mode-algebra toolkit for the derivatives of the chiral U(1) current"};
  app.require_subcommand(1);
  app.fallthrough();

  SharedConfig shared;
  app.add_option("--format", shared.format, "Output format")
      ->check(CLI::IsMember({"json", "table", "csv"}));
  app.add_option("--precision", shared.precision, "Working precision in decimal digits")
      ->check(CLI::Range(15u, 10000u));
  app.add_option("--tolerance", shared.tolerance, "Relative tolerance for numeric checks")
      ->check(CLI::PositiveNumber);
  app.add_option("--q", shared.q_text, "Central value of the zeroth mode, as p or p/q");

  int exit_code = 0;

  // pi
  int pi_degree = 1, pi_mode = 0;
  bool pi_prime = false;
  auto* pi_cmd = app.add_subcommand("pi", "Structure constant Pi(m) (or Pi'(m))");
  pi_cmd->add_option("--degree", pi_degree, "Derivative degree n")
      ->required()
      ->check(CLI::NonNegativeNumber);
  pi_cmd->add_option("--mode", pi_mode, "Mode index m")->required();
  pi_cmd->add_flag("--prime", pi_prime, "Evaluate Pi'(m) = Pi(m)/m instead");
  pi_cmd->callback([&] { exit_code = run_pi(shared, pi_degree, pi_mode, pi_prime); });

  // gram
  int gram_degree = 1, gram_level = 0;
  auto* gram_cmd = app.add_subcommand("gram", "Exact level Gram matrix");
  gram_cmd->add_option("--degree", gram_degree)->required()->check(CLI::NonNegativeNumber);
  gram_cmd->add_option("--level", gram_level)->required()->check(CLI::NonNegativeNumber);
  gram_cmd->callback([&] { exit_code = run_gram(shared, gram_degree, gram_level); });

  // nulls
  int nulls_degree = 1, nulls_level = 0;
  auto* nulls_cmd = app.add_subcommand("nulls", "Rank and null basis of a level");
  nulls_cmd->add_option("--degree", nulls_degree)->required()->check(CLI::NonNegativeNumber);
  nulls_cmd->add_option("--level", nulls_level)->required()->check(CLI::NonNegativeNumber);
  nulls_cmd->callback([&] { exit_code = run_nulls(shared, nulls_degree, nulls_level); });

  // character
  int character_degree = 1, character_max_level = 12;
  auto* character_cmd = app.add_subcommand("character", "Reduced character coefficients");
  character_cmd->add_option("--degree", character_degree)
      ->required()
      ->check(CLI::NonNegativeNumber);
  character_cmd->add_option("--max-level", character_max_level)
      ->check(CLI::NonNegativeNumber);
  character_cmd->callback(
      [&] { exit_code = run_character(shared, character_degree, character_max_level); });

  // bounds
  BoundsOptions bounds;
  auto* bounds_cmd = app.add_subcommand("bounds", "Energy-bound checks");
  bounds_cmd->add_option("--degree", bounds.degree)->required()->check(CLI::NonNegativeNumber);
  bounds_cmd->add_option("--mode", bounds.mode, "Single mode (default: sweep 1..max-mode)")
      ->check(CLI::PositiveNumber);
  bounds_cmd->add_option("--level", bounds.level, "Single level (default: sweep 0..max-level)")
      ->check(CLI::NonNegativeNumber);
  bounds_cmd->add_option("--max-mode", bounds.max_mode)->check(CLI::PositiveNumber);
  bounds_cmd->add_option("--max-level", bounds.max_level)->check(CLI::NonNegativeNumber);
  bounds_cmd->add_option("--kind", bounds.kind)
      ->check(CLI::IsMember({"annihilator", "creator", "both"}));
  bounds_cmd->add_option("--smeared", bounds.smeared,
                         "Run this many randomized smeared-field checks instead")
      ->check(CLI::PositiveNumber);
  bounds_cmd->add_option("--seed", bounds.seed, "Seed for the randomized checks");
  bounds_cmd->callback([&] { exit_code = run_bounds(shared, bounds); });

  // kernel-check
  int kernel_max_degree = 10;
  auto* kernel_cmd = app.add_subcommand("kernel-check", "Differential-operator identities");
  kernel_cmd->add_option("--max-degree", kernel_max_degree)->check(CLI::PositiveNumber);
  kernel_cmd->callback([&] { exit_code = run_kernel_check(shared, kernel_max_degree); });

  // nuclearity
  double beta0 = 1.70, beta_start = 0.5, beta_end = 0.02;
  int nuclearity_exponent = 1;
  std::size_t nuclearity_points = 25;
  auto* nuclearity_cmd = app.add_subcommand("nuclearity", "Partition-function decay probe");
  nuclearity_cmd->add_option("--beta0", beta0)->required()->check(CLI::PositiveNumber);
  nuclearity_cmd->add_option("--exponent", nuclearity_exponent)->check(CLI::PositiveNumber);
  nuclearity_cmd->add_option("--beta-start", beta_start)->check(CLI::PositiveNumber);
  nuclearity_cmd->add_option("--beta-end", beta_end)->check(CLI::PositiveNumber);
  nuclearity_cmd->add_option("--points", nuclearity_points)
      ->check(CLI::Range(std::size_t{2}, std::size_t{100000}));
  nuclearity_cmd->callback([&] {
    exit_code = run_nuclearity(shared, beta0, nuclearity_exponent, beta_start, beta_end,
                               nuclearity_points);
  });

  // certify
  int certify_degree = 1;
  auto* certify_cmd = app.add_subcommand("certify", "No-stress-tensor certificate");
  certify_cmd->add_option("--degree", certify_degree)
      ->required()
      ->check(CLI::NonNegativeNumber);
  certify_cmd->callback([&] { exit_code = run_certify(shared, certify_degree); });

  // verify
  std::string verify_input;
  auto* verify_cmd = app.add_subcommand("verify", "Replay a certificate from JSON");
  verify_cmd->add_option("--input", verify_input, "Certificate file, or - for stdin")
      ->required();
  verify_cmd->callback([&] { exit_code = run_verify(shared, verify_input); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
