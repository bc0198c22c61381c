#pragma once

#include <string>

#include "json.hpp"

#include "cagekit/inscribe.hpp"
#include "cagekit/verify.hpp"
#include "cagekit/viete.hpp"

namespace cagekit::io {

using json = nlohmann::json;

inline constexpr const char* kSchema = "cagekit/1";

// Every parser reports malformed input as SchemaError naming the JSON path.

json field_to_json(const Field& field);
Field field_from_json(const json& j, const std::string& path = "$");

/// Rationals as "n" or "n/d"; extension elements as arrays of such strings.
json element_to_json(const FieldElement& x);
FieldElement element_from_json(const Field& field, const json& j, const std::string& path = "$");
json vector_to_json(const Vector& v);
Vector vector_from_json(const Field& field, const json& j, const std::string& path = "$");

json poly_to_json(const HomogPoly& p);
HomogPoly poly_from_json(const Field& field, const json& j, const std::string& path = "$");

json cage_to_json(const Cage& c);
/// The returned cage is not validated.
Cage cage_from_json(const json& j, const std::string& path = "$");

json nodes_to_json(const Cage& c);
json validation_to_json(const ValidationReport& report);

struct Variety {
  Cage cage;
  LambdaMatrix lambda;
};

json variety_to_json(const Cage& c, const LambdaMatrix& lambda);
Variety variety_from_json(const json& j, const std::string& path = "$");

json tangent_to_json(const TangentSubspace& tau);
/// Needs the validated cage to resolve the node.
TangentSubspace tangent_from_json(const Cage& c, const json& j, const std::string& path = "$");

json report_to_json(const VerificationReport& report, bool include_timing);
VerificationReport report_from_json(const Field& field, const json& j, const std::string& path = "$");
json identity_to_json(const IdentityReport& report);

json configuration_to_json(const Configuration& q);
/// Uses the "field" member when present, otherwise the rationals.
Configuration configuration_from_json(const json& j, const std::string& path = "$");

json multi_index_to_json(const MultiIndex& index);
MultiIndex multi_index_from_json(const json& j, const std::string& path = "$");

json parse_text(const std::string& text, const std::string& source);

}  // namespace cagekit::io
