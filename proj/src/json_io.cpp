#include "phin/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace phin {

std::string float_text(const BigFloat& value, unsigned digits) {
  return value.str(digits, std::ios_base::scientific);
}

Json rational_to_json(const Rational& value) { return to_string(value); }

namespace {

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw std::invalid_argument("expected a rational encoded as a string");
  return rational_from_string(j.get<std::string>());
}

Json gamma_polynomial_to_json(const GammaPolynomial& p) {
  Json j;
  j["constant"] = rational_to_json(p.constant);
  j["u"] = rational_to_json(p.u_coefficient);
  return j;
}

GammaPolynomial gamma_polynomial_from_json(const Json& j) {
  GammaPolynomial p;
  p.constant = rational_from_json(j.at("constant"));
  p.u_coefficient = rational_from_json(j.at("u"));
  return p;
}

}  // namespace

Json partition_to_json(const PartitionState& state) {
  Json j = Json::array();
  for (int part : state) j.push_back(part);
  return j;
}

namespace {

PartitionState partition_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a partition encoded as an array");
  PartitionState state;
  for (const auto& part : j) state.push_back(part.get<int>());
  return state;
}

}  // namespace

Json fock_vector_to_json(const FockVector& v) {
  Json j = Json::array();
  for (const auto& [state, coefficient] : v.coeffs) {
    Json term;
    term["state"] = partition_to_json(state);
    term["coefficient"] = rational_to_json(coefficient);
    j.push_back(term);
  }
  return j;
}

FockVector fock_vector_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a vector encoded as an array");
  FockVector v;
  for (const auto& term : j) {
    v.add_term(partition_from_json(term.at("state")),
               rational_from_json(term.at("coefficient")));
  }
  return v;
}

Json gram_to_json(const GramMatrix& gram) {
  Json j;
  j["degree"] = gram.degree;
  j["level"] = gram.level;
  j["q"] = rational_to_json(gram.zero_mode);
  Json basis = Json::array();
  for (const auto& state : gram.basis) basis.push_back(partition_to_json(state));
  j["basis"] = basis;
  Json entries = Json::array();
  for (std::size_t r = 0; r < gram.entries.rows; ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < gram.entries.cols; ++c) {
      row.push_back(rational_to_json(gram.entries.at(r, c)));
    }
    entries.push_back(row);
  }
  j["entries"] = entries;
  return j;
}

GramMatrix gram_from_json(const Json& j) {
  GramMatrix gram;
  gram.degree = j.at("degree").get<int>();
  gram.level = j.at("level").get<int>();
  gram.zero_mode = rational_from_json(j.at("q"));
  for (const auto& state : j.at("basis")) gram.basis.push_back(partition_from_json(state));
  const Json& entries = j.at("entries");
  const std::size_t rows = entries.size();
  const std::size_t cols = rows == 0 ? 0 : entries.at(0).size();
  gram.entries = RationalMatrix(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const Json& row = entries.at(r);
    if (row.size() != cols) throw std::invalid_argument("ragged gram entry rows");
    for (std::size_t c = 0; c < cols; ++c) {
      gram.entries.at(r, c) = rational_from_json(row.at(c));
    }
  }
  return gram;
}

Json null_report_to_json(const NullReport& report) {
  Json j;
  j["degree"] = report.degree;
  j["level"] = report.level;
  j["dimension"] = report.dimension;
  j["rank"] = report.rank;
  Json basis = Json::array();
  for (const auto& state : report.basis) basis.push_back(partition_to_json(state));
  j["basis"] = basis;
  Json null_basis = Json::array();
  for (const auto& v : report.null_basis) null_basis.push_back(fock_vector_to_json(v));
  j["null_basis"] = null_basis;
  return j;
}

Json bound_report_to_json(const BoundReport& report, unsigned digits) {
  Json j;
  j["kind"] = report.kind;
  j["degree"] = report.degree;
  j["mode"] = report.mode;
  j["level"] = report.level;
  j["effective_dimension"] = report.effective_dimension;
  j["observed"] = float_text(report.observed, digits);
  j["bound"] = float_text(report.bound, digits);
  if (report.bound_is_exact) {
    j["bound_exact"] = rational_to_json(report.bound_exact);
  } else {
    j["bound_exact"] = nullptr;
  }
  j["min_eigenvalue"] = float_text(report.min_eigenvalue, digits);
  j["tolerance"] = report.tolerance;
  j["pass"] = report.pass;
  j["note"] = report.note;
  return j;
}

Json character_to_json(const CharacterSeries& series) {
  Json j;
  j["degree"] = series.degree;
  j["cutoff"] = series.cutoff;
  Json coefficients = Json::array();
  for (const auto& value : series.coefficients) coefficients.push_back(value.get_str());
  j["coefficients"] = coefficients;
  return j;
}

Json nuclearity_to_json(const NuclearityTable& table, unsigned digits) {
  Json j;
  j["beta0"] = float_text(table.beta0, digits);
  j["exponent"] = table.exponent;
  j["precision"] = table.digits;
  Json rows = Json::array();
  for (const auto& row : table.rows) {
    Json r;
    r["beta"] = float_text(row.beta, digits);
    r["partition_value"] = float_text(row.partition_value, digits);
    r["probe_value"] = float_text(row.probe_value, digits);
    r["log_probe"] = float_text(row.log_probe, digits);
    rows.push_back(r);
  }
  j["rows"] = rows;
  j["verdict"] = table.verdict;
  j["threshold_note"] = table.threshold_note;
  return j;
}

std::string nuclearity_to_csv(const NuclearityTable& table, unsigned digits) {
  std::ostringstream out;
  out << "beta,p,f,log_f\n";
  for (const auto& row : table.rows) {
    out << float_text(row.beta, digits) << "," << float_text(row.partition_value, digits)
        << "," << float_text(row.probe_value, digits) << ","
        << float_text(row.log_probe, digits) << "\n";
  }
  return out.str();
}

namespace {

Json virasoro_check_to_json(const VirasoroCheck& check) {
  Json j;
  j["mode"] = check.mode;
  j["witness"] = fock_vector_to_json(check.witness);
  j["level"] = check.level;
  j["witness_norm"] = rational_to_json(check.witness_norm);
  j["central_coefficient"] = rational_to_json(check.central_coefficient);
  j["bracket_expectation"] = rational_to_json(check.bracket_expectation);
  j["required"] = gamma_polynomial_to_json(check.required);
  j["actual"] = gamma_polynomial_to_json(check.actual);
  j["mismatch"] = gamma_polynomial_to_json(check.mismatch);
  return j;
}

VirasoroCheck virasoro_check_from_json(const Json& j) {
  VirasoroCheck check;
  check.mode = j.at("mode").get<int>();
  check.witness = fock_vector_from_json(j.at("witness"));
  check.level = j.at("level").get<int>();
  check.witness_norm = rational_from_json(j.at("witness_norm"));
  check.central_coefficient = rational_from_json(j.at("central_coefficient"));
  check.bracket_expectation = rational_from_json(j.at("bracket_expectation"));
  check.required = gamma_polynomial_from_json(j.at("required"));
  check.actual = gamma_polynomial_from_json(j.at("actual"));
  check.mismatch = gamma_polynomial_from_json(j.at("mismatch"));
  return check;
}

}  // namespace

Json certificate_to_json(const Certificate& certificate) {
  Json j;
  j["variant"] = certificate.variant;
  j["degree"] = certificate.degree;
  Json level2;
  level2["dimension"] = certificate.level2_dimension;
  level2["rank"] = certificate.level2_rank;
  level2["gram"] = gram_to_json(certificate.level2_gram);
  j["level2"] = level2;
  if (certificate.variant == "NullLevelTwo") {
    j["central_charge"] = rational_to_json(certificate.central_charge);
    j["positivity_side_condition"] = certificate.positivity_side_condition;
  }
  if (certificate.variant == "UniqueCandidateContradiction") {
    j["gamma_relation"] = certificate.gamma_relation;
    j["central_charge_u"] = gamma_polynomial_to_json(certificate.central_charge_u);
    Json checks = Json::array();
    for (const auto& check : certificate.checks) checks.push_back(virasoro_check_to_json(check));
    j["checks"] = checks;
    j["inference_note"] = certificate.inference_note;
  }
  j["conclusion"] = certificate.conclusion;
  return j;
}

Certificate certificate_from_json(const Json& j) {
  try {
    Certificate certificate;
    certificate.variant = j.at("variant").get<std::string>();
    certificate.degree = j.at("degree").get<int>();
    const Json& level2 = j.at("level2");
    certificate.level2_dimension = level2.at("dimension").get<std::size_t>();
    certificate.level2_rank = level2.at("rank").get<std::size_t>();
    certificate.level2_gram = gram_from_json(level2.at("gram"));
    if (certificate.variant == "NullLevelTwo") {
      certificate.central_charge = rational_from_json(j.at("central_charge"));
      certificate.positivity_side_condition =
          j.at("positivity_side_condition").get<bool>();
    }
    if (certificate.variant == "UniqueCandidateContradiction") {
      certificate.gamma_relation = j.at("gamma_relation").get<std::string>();
      certificate.central_charge_u = gamma_polynomial_from_json(j.at("central_charge_u"));
      for (const auto& check : j.at("checks")) {
        certificate.checks.push_back(virasoro_check_from_json(check));
      }
      certificate.inference_note = j.at("inference_note").get<std::string>();
    }
    certificate.conclusion = j.at("conclusion").get<std::string>();
    return certificate;
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("malformed certificate: ") + e.what());
  }
}

}  // namespace phin
