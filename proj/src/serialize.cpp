#include "maschke/serialize.hpp"

#include <algorithm>

#include "maschke/errors.hpp"

namespace maschke {

nlohmann::json to_json(const FieldElement& x) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : x.coords()) out.push_back(c.to_string());
  return out;
}

FieldElement field_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != FieldElement::kDim) {
    throw PreconditionError("field element must be an array of 8 rational strings");
  }
  FieldElement::Coords coords;
  for (std::size_t k = 0; k < FieldElement::kDim; ++k) {
    if (!j[k].is_string()) throw PreconditionError("field coordinate must be a string");
    coords[k] = Rational::parse(j[k].get<std::string>());
  }
  return FieldElement(std::move(coords));
}

nlohmann::json to_json(const Line& line) {
  nlohmann::json span = nlohmann::json::array();
  for (const auto& row : line.span()) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& x : row) r.push_back(to_json(x));
    span.push_back(std::move(r));
  }
  return {{"span", std::move(span)}};
}

Line line_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("span") || !j["span"].is_array() || j["span"].size() != 2) {
    throw PreconditionError("line must be an object with a 2x4 \"span\"");
  }
  std::array<Vector4, 2> rows;
  for (std::size_t r = 0; r < 2; ++r) {
    const auto& row = j["span"][r];
    if (!row.is_array() || row.size() != 4) throw PreconditionError("span rows must have 4 entries");
    for (std::size_t c = 0; c < 4; ++c) rows[r][c] = field_from_json(row[c]);
  }
  return Line::from_span(rows[0], rows[1]);
}

nlohmann::json lines_to_json(std::span<const Line> lines) {
  std::vector<Line> sorted(lines.begin(), lines.end());
  std::sort(sorted.begin(), sorted.end());
  nlohmann::json out = nlohmann::json::array();
  for (const auto& l : sorted) out.push_back(to_json(l));
  return out;
}

}  // namespace maschke
