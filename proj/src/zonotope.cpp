#include "primpack/zonotope.hpp"

#include <algorithm>
#include <stdexcept>

namespace primpack {

ZonotopeSummary zonotope_summary(const HalfPointSet& X, long long k) {
    if (X.empty()) throw std::invalid_argument("zonotope_summary: empty generator set");
    const int d = X.dim();
    ZonotopeSummary s;
    s.generators = X;
    s.diameter = static_cast<long long>(X.size());
    s.box_widths = X.column_sums();
    s.fits_in_cube = kappa(X) <= k;
    s.translation.assign(d, 0);
    for (const Point& g : X)
        for (int i = 0; i < d; ++i)
            if (g[i] < 0) s.translation[i] -= g[i];
    return s;
}

std::vector<Point> polygon_vertices_2d(const HalfPointSet& X) {
    if (X.dim() != 2) throw std::invalid_argument("polygon_vertices_2d: dimension must be 2");
    if (X.empty()) throw std::invalid_argument("polygon_vertices_2d: empty generator set");

    // Half-lattice generators live in the closed right half plane, so the
    // exact cross product is a strict angular order.
    std::vector<Point> gens = X.points();
    std::sort(gens.begin(), gens.end(), [](const Point& a, const Point& b) {
        return static_cast<__int128>(a[0]) * b[1] - static_cast<__int128>(a[1]) * b[0] > 0;
    });

    std::vector<Point> verts;
    Point cur{0, 0};
    if (gens.size() == 1) {
        verts.push_back(cur);
        verts.push_back(gens[0]);
    } else {
        for (const Point& g : gens) {
            verts.push_back(cur);
            cur = {cur[0] + g[0], cur[1] + g[1]};
        }
        for (const Point& g : gens) {
            verts.push_back(cur);
            cur = {cur[0] - g[0], cur[1] - g[1]};
        }
    }

    // Shift into the nonnegative quadrant, then start the cycle at the
    // lexicographic minimum.
    long long tx = 0, ty = 0;
    for (const Point& g : gens) {
        if (g[0] < 0) tx -= g[0];
        if (g[1] < 0) ty -= g[1];
    }
    for (Point& v : verts) {
        v[0] += tx;
        v[1] += ty;
    }
    auto min_it = std::min_element(verts.begin(), verts.end());
    std::rotate(verts.begin(), min_it, verts.end());
    return verts;
}

}  // namespace primpack
