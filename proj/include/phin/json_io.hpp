#pragma once

#include <json.hpp>

#include <string>

#include "phin/bounds.hpp"
#include "phin/certify.hpp"
#include "phin/characters.hpp"
#include "phin/fock.hpp"

namespace phin {

// All reports use ordered JSON objects so that serialization is byte-stable
// across runs: field order is insertion order, map iteration is already
// deterministic, and floats are rendered as fixed-precision strings.
using Json = nlohmann::ordered_json;

// Fixed scientific rendering with `digits` significant digits.
std::string float_text(const BigFloat& value, unsigned digits);

Json rational_to_json(const Rational& value);  // "p" or "p/q"
Json partition_to_json(const PartitionState& state);
Json fock_vector_to_json(const FockVector& v);
FockVector fock_vector_from_json(const Json& j);

Json gram_to_json(const GramMatrix& gram);
GramMatrix gram_from_json(const Json& j);

Json null_report_to_json(const NullReport& report);
Json bound_report_to_json(const BoundReport& report, unsigned digits);
Json character_to_json(const CharacterSeries& series);
Json nuclearity_to_json(const NuclearityTable& table, unsigned digits);
std::string nuclearity_to_csv(const NuclearityTable& table, unsigned digits);

Json certificate_to_json(const Certificate& certificate);
// Throws std::invalid_argument on a structurally malformed document.
Certificate certificate_from_json(const Json& j);

}  // namespace phin
