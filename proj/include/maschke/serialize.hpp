#pragma once

#include <span>
#include <vector>

#include "json.hpp"
#include "maschke/field.hpp"
#include "maschke/geom.hpp"

namespace maschke {

/// FieldElement as an array of 8 canonical "num/den" strings.
nlohmann::json to_json(const FieldElement& x);
FieldElement field_from_json(const nlohmann::json& j);

/// {"span": [[4 elements], [4 elements]]}
nlohmann::json to_json(const Line& line);
/// Reads a span and re-canonicalizes it.
Line line_from_json(const nlohmann::json& j);

/// JSON array of lines in canonical order, independent of input order.
nlohmann::json lines_to_json(std::span<const Line> lines);

}  // namespace maschke
