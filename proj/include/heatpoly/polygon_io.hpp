#pragma once

#include <filesystem>
#include <string>

#include "heatpoly/geometry.hpp"
#include "json.hpp"

namespace heatpoly::io {

/// Polygon file schema:
///   { "loops": [ { "vertices": [[x, y], ...], "edges": ["D" | "N", ...] } ] }
/// edges[i] marks the segment vertices[i] -> vertices[(i+1) mod n].
/// Structural problems throw GeometryError with a loop/index location.
RawPolygon parse_polygon(const nlohmann::json& doc);
RawPolygon parse_polygon(const std::string& text);
Polygon load_polygon(const std::filesystem::path& path);

nlohmann::json to_json(const Polygon& polygon);

}  // namespace heatpoly::io
