#include "primpack/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace primpack {

long long norm1(const Point& x) {
    long long s = 0;
    for (Coord c : x) s = checked_add(s, c < 0 ? -c : c);
    return s;
}

bool is_primitive(const Point& x) {
    long long g = 0;
    for (Coord c : x) g = std::gcd(g, c < 0 ? -c : c);
    return g == 1;
}

bool in_half_set(const Point& x) {
    for (Coord c : x) {
        if (c > 0) return true;
        if (c < 0) return false;
    }
    return false;
}

Point tau(const Point& x) {
    if (x.empty()) throw std::invalid_argument("tau: empty point");
    const std::size_t d = x.size();
    Point y(d);
    bool negate = x[d - 1] < 0;
    y[0] = x[d - 1];
    for (std::size_t i = 1; i < d; ++i) y[i] = x[i - 1];
    if (negate)
        for (Coord& c : y) c = -c;
    return y;
}

Point canonical_half(Point x) {
    for (Coord c : x) {
        if (c > 0) return x;
        if (c < 0) {
            for (Coord& v : x) v = -v;
            return x;
        }
    }
    return x;  // zero point, caller's problem
}

HalfPointSet HalfPointSet::of(int dim, std::vector<Point> points) {
    if (dim < 1) throw std::invalid_argument("HalfPointSet: dimension must be >= 1");
    for (const Point& x : points) {
        if (static_cast<int>(x.size()) != dim)
            throw std::invalid_argument("HalfPointSet: mixed dimensions");
        if (!is_primitive(x)) throw std::invalid_argument("HalfPointSet: non-primitive point");
        if (!in_half_set(x)) throw std::invalid_argument("HalfPointSet: point outside half set");
    }
    std::sort(points.begin(), points.end());
    if (std::adjacent_find(points.begin(), points.end()) != points.end())
        throw std::invalid_argument("HalfPointSet: duplicate point");
    return of_sorted_unchecked(dim, std::move(points));
}

HalfPointSet HalfPointSet::of_sorted_unchecked(int dim, std::vector<Point> points) {
    HalfPointSet s;
    s.dim_ = dim;
    s.points_ = std::move(points);
    s.column_sums_.assign(dim, 0);
    for (const Point& x : s.points_)
        for (int i = 0; i < dim; ++i)
            s.column_sums_[i] = checked_add(s.column_sums_[i], x[i] < 0 ? -x[i] : x[i]);
    return s;
}

bool HalfPointSet::contains(const Point& x) const {
    return std::binary_search(points_.begin(), points_.end(), x);
}

long long kappa(const HalfPointSet& X) {
    long long m = 0;
    for (long long s : X.column_sums()) m = std::max(m, s);
    return m;
}

HalfPointSet orbit(const Point& x) {
    if (!is_primitive(x)) throw std::invalid_argument("orbit: point must be primitive");
    const int d = static_cast<int>(x.size());
    std::vector<Point> pts;
    Point cur = x;
    for (int i = 0; i < d; ++i) {
        pts.push_back(canonical_half(cur));
        cur = tau(cur);
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return HalfPointSet::of_sorted_unchecked(d, std::move(pts));
}

namespace {

// Lexicographic generation: coordinates left to right; while everything so
// far is zero the next coordinate must stay nonnegative.
void gen_shell(int d, long long p, int pos, long long remaining, bool all_zero,
               Point& acc, std::vector<Point>& out) {
    if (pos == d - 1) {
        if (remaining == 0) {
            if (!all_zero) {
                acc[pos] = 0;
                if (is_primitive(acc)) out.push_back(acc);
            }
            return;
        }
        for (Coord v : {-remaining, remaining}) {
            if (v < 0 && all_zero) continue;
            acc[pos] = v;
            if (is_primitive(acc)) out.push_back(acc);
        }
        return;
    }
    long long lo = all_zero ? 0 : -remaining;
    for (long long v = lo; v <= remaining; ++v) {
        acc[pos] = v;
        gen_shell(d, p, pos + 1, remaining - (v < 0 ? -v : v), all_zero && v == 0, acc, out);
    }
}

}  // namespace

HalfPointSet enumerate_shell_half(int d, long long p) {
    if (d < 2) throw std::invalid_argument("enumerate_shell_half: d must be >= 2");
    if (p < 1) throw std::invalid_argument("enumerate_shell_half: p must be >= 1");
    std::vector<Point> out;
    Point acc(d);
    gen_shell(d, p, 0, p, true, acc, out);
    std::sort(out.begin(), out.end());
    return HalfPointSet::of_sorted_unchecked(d, std::move(out));
}

HalfPointSet enumerate_ball_half(int d, long long p) {
    if (d < 2) throw std::invalid_argument("enumerate_ball_half: d must be >= 2");
    if (p < 1) throw std::invalid_argument("enumerate_ball_half: p must be >= 1");
    std::vector<Point> out;
    for (long long i = 1; i <= p; ++i) {
        auto shell = enumerate_shell_half(d, i);
        out.insert(out.end(), shell.points().begin(), shell.points().end());
    }
    std::sort(out.begin(), out.end());
    return HalfPointSet::of_sorted_unchecked(d, std::move(out));
}

}  // namespace primpack
