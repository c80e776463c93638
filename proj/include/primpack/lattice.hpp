#pragma once

#include <vector>

#include "primpack/checked.hpp"

namespace primpack {

using Coord = long long;
/// Exact integer lattice point; the dimension is the vector length.
using Point = std::vector<Coord>;

/// 1-norm, sum of absolute coordinate values.
long long norm1(const Point& x);

/// True iff the coordinates are relatively prime.  The zero point is not
/// primitive.
bool is_primitive(const Point& x);

/// True iff x != 0 and the first nonzero coordinate is positive.
bool in_half_set(const Point& x);

/// Signed cyclic shift: sigma(x) if x_d >= 0, else -sigma(x), where sigma
/// rotates coordinates down by one.  Generates a cyclic group of order d.
Point tau(const Point& x);

/// Representative of {x, -x} with positive first nonzero coordinate.
Point canonical_half(Point x);

/// A finite, duplicate-free set of primitive half-lattice points, kept in
/// lexicographic order, with cached per-coordinate absolute column sums.
class HalfPointSet {
public:
    HalfPointSet() = default;

    /// Validates every point (primitive, half set, uniform dimension),
    /// sorts lexicographically and rejects duplicates.
    static HalfPointSet of(int dim, std::vector<Point> points);

    /// Same, but trusts the caller; used on hot internal paths.
    static HalfPointSet of_sorted_unchecked(int dim, std::vector<Point> points);

    int dim() const { return dim_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    const std::vector<Point>& points() const { return points_; }
    const std::vector<long long>& column_sums() const { return column_sums_; }

    bool contains(const Point& x) const;

    auto begin() const { return points_.begin(); }
    auto end() const { return points_.end(); }

    bool operator==(const HalfPointSet&) const = default;

private:
    int dim_ = 0;
    std::vector<Point> points_;
    std::vector<long long> column_sums_;
};

/// Largest absolute column sum; 0 for the empty set.
long long kappa(const HalfPointSet& X);

/// Orbit of a primitive point under the cyclic action, canonicalized into
/// the half lattice.  Its size divides d and all members share the 1-norm.
HalfPointSet orbit(const Point& x);

/// All primitive half-lattice points of 1-norm exactly p (d >= 2, p >= 1).
HalfPointSet enumerate_shell_half(int d, long long p);

/// Union of the shells 1..p.
HalfPointSet enumerate_ball_half(int d, long long p);

}  // namespace primpack
