#pragma once

#include <string>

#include <json.hpp>

#include "primpack/lattice.hpp"

namespace primpack {

/// {"d": int, "points": [[int,...],...]}, points in lexicographic order.
nlohmann::ordered_json to_json(const HalfPointSet& X);

/// Parses and validates the same shape.
HalfPointSet half_point_set_from_json(const nlohmann::json& j);

/// Standalone SVG drawing of a closed integer polygon, with the cube
/// [0,k]^2 drawn behind it when k >= 0.
std::string polygon_svg(const std::vector<Point>& vertices, long long k);

}  // namespace primpack
