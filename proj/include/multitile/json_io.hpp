#pragma once

// JSON encodings of field elements, vectors, lattices, polygons, scenes and
// reports. Output is canonical: equal values produce byte-identical text.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "multitile/criteria.hpp"
#include "multitile/oracle.hpp"
#include "multitile/patterns.hpp"

namespace multitile {

using Json = nlohmann::ordered_json;

// Plain-text field elements: sums of terms like "3", "-1/2", "sqrt(2)",
// "2/3*sqrt(5)". Throws ParseError.
FieldElement parse_field_text(const std::string& text);

Json to_json(const FieldElement& value);
Json to_json(const PlaneVector& v);
Json to_json(const PlaneLattice& lattice);
Json to_json(const Zonotope& zonotope);
Json to_json(const Polygon& polygon);
Json to_json(const Box& box);
Json to_json(const BolleReport& report);
Json to_json(const Decision& decision);
Json to_json(const LPResult& result);
Json to_json(const VerifyReport& report);
Json to_json(const std::vector<StripEntry>& profile);

// Parsers accept the canonical encodings above; field elements may also be
// JSON integers or strings in the plain-text syntax. All throw ParseError.
FieldElement field_from_json(const Json& j);
PlaneVector vector_from_json(const Json& j);
PlaneLattice lattice_from_json(const Json& j);
Zonotope zonotope_from_json(const Json& j);
// {"vertices": [...]} for any simple polygon, or {"generators": [...]}.
Polygon polygon_from_json(const Json& j);
Box box_from_json(const Json& j);

// A scene: polygon, translate set and verification settings, remembering how
// the translate set was given so it can be written back unchanged.
struct SceneInput {
  Polygon polygon;
  TranslateSet lambda;
  Json lambda_json;
  std::optional<VerifyMode> mode;
  std::optional<std::size_t> samples;
};

SceneInput scene_from_json(const Json& j);
Json to_json(const SceneInput& scene);

// Scene JSON for a builtin pattern, as printed by the examples command.
Json builtin_scene_json(const std::string& name, const Box& window, const FieldElement& beta);

Json parse_json_text(const std::string& text);
Json read_json_file(const std::string& path);

}  // namespace multitile
