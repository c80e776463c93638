#pragma once

#include <vector>

#include "primpack/lattice.hpp"

namespace primpack {

/// Combinatorial summary of the zonotope generated by a half-lattice set:
/// the Minkowski sum of the segments [0, g].  Distinct points of the half
/// lattice are pairwise non-parallel, so the graph diameter equals the
/// number of generators.
struct ZonotopeSummary {
    HalfPointSet generators;
    long long diameter;                  // = number of generators
    std::vector<long long> box_widths;   // per-coordinate extent
    bool fits_in_cube;                   // max width <= k
    std::vector<long long> translation;  // shift placing it inside [0,k]^d
};

ZonotopeSummary zonotope_summary(const HalfPointSet& X, long long k);

/// Vertices of the 2-D zonogon, counterclockwise, exact integer pairs,
/// starting from the lexicographic minimum.  2|X| vertices for |X| >= 2,
/// two endpoints for a single generator.
std::vector<Point> polygon_vertices_2d(const HalfPointSet& X);

}  // namespace primpack
