#include "primpack/construct.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "primpack/counting.hpp"

namespace primpack {

namespace {

[[noreturn]] void defect(const std::string& msg) {
    throw std::logic_error("construct: " + msg);
}

// Column sums of a plain point list.
std::vector<long long> columns_of(int d, const std::vector<Point>& pts) {
    std::vector<long long> col(d, 0);
    for (const Point& x : pts)
        for (int i = 0; i < d; ++i) col[i] += x[i] < 0 ? -x[i] : x[i];
    return col;
}

bool all_columns_equal(const std::vector<long long>& col, long long v) {
    return std::all_of(col.begin(), col.end(), [v](long long c) { return c == v; });
}

// Orbits of the shell-p points, ordered by their lexicographically minimal
// element; each orbit sorted internally.
std::vector<std::vector<Point>> shell_orbits(int d, long long p) {
    const auto shell = enumerate_shell_half(d, p).points();
    std::vector<bool> used(shell.size(), false);
    std::vector<std::vector<Point>> orbits;
    for (std::size_t i = 0; i < shell.size(); ++i) {
        if (used[i]) continue;
        auto orb = orbit(shell[i]).points();
        for (const Point& y : orb) {
            auto it = std::lower_bound(shell.begin(), shell.end(), y);
            if (it == shell.end() || *it != y) defect("orbit escaped its shell");
            used[static_cast<std::size_t>(it - shell.begin())] = true;
        }
        orbits.push_back(std::move(orb));
    }
    return orbits;
}

// Union of orbits, greedily in order, as long as the total stays within
// `cap`; orbits meeting `reserved` are skipped.
std::vector<Point> greedy_orbit_fill(const std::vector<std::vector<Point>>& orbits,
                                     const std::set<Point>& reserved, long long cap) {
    std::vector<Point> picked;
    for (const auto& orb : orbits) {
        if (reserved.count(orb.front())) continue;
        if (static_cast<long long>(picked.size() + orb.size()) > cap) continue;
        picked.insert(picked.end(), orb.begin(), orb.end());
    }
    return picked;
}

Point all_ones(int d) { return Point(static_cast<std::size_t>(d), 1); }

// --- gadget for d > 2, d | p: three norm-p points with two consecutive
// coordinates each, whose orbit union admits balanced j-subsets.
struct Gadget {
    std::vector<Point> a, b, c;   // full orbits indexed by tau power
    std::vector<Point> all;       // sorted union
    long long m;                  // p/d
};

Gadget make_gadget(int d, long long p) {
    const long long m = p / d;
    Point a(static_cast<std::size_t>(d), m), b, c;
    a[0] = m - 1;
    a[1] = m + 1;
    b = a;
    std::swap(b[0], b[1]);
    c = b;
    std::swap(c[1], c[2]);
    Gadget g;
    g.m = m;
    for (Point x : {a, b, c}) {
        std::vector<Point> orb(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) {
            orb[static_cast<std::size_t>(i)] = canonical_half(x);
            x = tau(x);
        }
        if (g.a.empty()) g.a = orb;
        else if (g.b.empty()) g.b = orb;
        else g.c = orb;
        g.all.insert(g.all.end(), orb.begin(), orb.end());
    }
    std::sort(g.all.begin(), g.all.end());
    g.all.erase(std::unique(g.all.begin(), g.all.end()), g.all.end());
    const std::size_t expect = d == 3 ? 6u : 3u * static_cast<std::size_t>(d);
    if (g.all.size() != expect) defect("gadget orbit union has unexpected size");
    return g;
}

// j gadget elements whose column sums are all j*p/d.
std::vector<Point> gadget_subset(int d, const Gadget& g, long long j) {
    const long long y = static_cast<long long>(g.all.size());
    if (j < 2 || j > y - 2) defect("gadget subset size out of range");
    if (j > y / 2) {
        auto drop = gadget_subset(d, g, y - j);
        std::set<Point> dropped(drop.begin(), drop.end());
        std::vector<Point> keep;
        for (const Point& x : g.all)
            if (!dropped.count(x)) keep.push_back(x);
        return keep;
    }
    std::vector<Point> s;
    if (j % 2 == 0) {
        for (long long i = 1; i <= j / 2; ++i) {
            s.push_back(g.a[static_cast<std::size_t>(i)]);
            s.push_back(g.b[static_cast<std::size_t>(i)]);
        }
    } else if (d == 3) {
        if (j != 3) defect("odd gadget subset in dimension 3 must have size 3");
        s = {g.a[0], g.a[1], g.a[2]};
    } else {
        for (long long i = 1; i <= (j + 1) / 2; ++i)
            s.push_back(g.a[static_cast<std::size_t>(i)]);
        for (long long i = 1; i <= (j - 3) / 2; ++i)
            s.push_back(g.b[static_cast<std::size_t>(i)]);
        s.push_back(g.c[static_cast<std::size_t>((j - 1) / 2)]);
    }
    return s;
}

}  // namespace

Point staircase_point(int d, long long p) {
    if (d < 2 || p < 1) throw std::invalid_argument("staircase_point: need d >= 2, p >= 1");
    const long long r = p % d;
    if (r == 0) throw std::invalid_argument("staircase_point: d must not divide p");
    const long long q = p / d;
    Point x(static_cast<std::size_t>(d), q);
    for (long long i = 0; i < r; ++i) x[static_cast<std::size_t>(i)] = q + 1;
    return x;
}

HalfPointSet s_chain(int d, long long p, int j) {
    if (j < 0 || j > d) throw std::invalid_argument("s_chain: need 0 <= j <= d");
    const Point x = staircase_point(d, p);  // also validates d, p
    if (j == 0) return HalfPointSet::of(d, {});
    const long long r = p % d;
    std::vector<Point> orb(static_cast<std::size_t>(d));
    {
        Point cur = x;
        for (int i = 0; i < d; ++i) {
            orb[static_cast<std::size_t>(i)] = canonical_half(cur);
            cur = tau(cur);
        }
    }
    const long long target = (static_cast<long long>(j) * p + d - 1) / d;  // ceil(jp/d)

    auto build = [&](const std::vector<long long>& shifts) {
        std::vector<Point> pts;
        for (long long t : shifts) pts.push_back(orb[static_cast<std::size_t>(t % d)]);
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        return pts;
    };

    // The natural chain steps by r; when gcd(r,d) is too small that walk
    // revisits points, so fall back to a maximally even shift selection,
    // which balances every length-r window of the rotation pattern.
    auto chain_kappa = [&](const std::vector<Point>& pts) {
        auto col = columns_of(d, pts);
        return *std::max_element(col.begin(), col.end());
    };

    std::vector<long long> shifts;
    for (int i = 1; i <= j; ++i) shifts.push_back(static_cast<long long>(i) * r % d);
    std::vector<Point> pts = build(shifts);
    if (static_cast<int>(pts.size()) != j || chain_kappa(pts) != target) {
        shifts.clear();
        for (int i = 0; i < j; ++i)
            shifts.push_back(static_cast<long long>(i) * d / j);
        pts = build(shifts);
    }
    if (static_cast<int>(pts.size()) != j) defect("s_chain produced duplicate points");
    if (chain_kappa(pts) != target) defect("s_chain kappa differs from ceil(jp/d)");
    return HalfPointSet::of(d, std::move(pts));
}

namespace {

std::vector<Point> construct_points(int d, long long k, const PackingAnswer& ans);

// d not dividing p: previous ball, a C-invariant orbit union, and a chain.
std::vector<Point> build_nondivisor(int d, long long k, const PackingAnswer& ans,
                                    long long kappa_prev) {
    const long long p = ans.p;
    const long long M = (k - kappa_prev) * d / p;
    const Point x = staircase_point(d, p);
    const auto reserved_orbit = orbit(x).points();
    std::set<Point> reserved(reserved_orbit.begin(), reserved_orbit.end());
    std::vector<Point> picked = greedy_orbit_fill(shell_orbits(d, p), reserved, M);
    const long long j = M - static_cast<long long>(picked.size());
    if (j < 0 || j >= d) defect("orbit fill missed the chain window");
    std::vector<Point> out = enumerate_ball_half(d, p - 1).points();
    out.insert(out.end(), picked.begin(), picked.end());
    const auto chain = s_chain(d, p, static_cast<int>(j)).points();
    out.insert(out.end(), chain.begin(), chain.end());
    return out;
}

// d > 2 and d | p.
std::vector<Point> build_divisor_highdim(int d, long long k, const PackingAnswer& ans,
                                         long long kappa_prev, long long kappa_cur) {
    const long long p = ans.p;
    const long long m = p / d;
    const long long c1 = k - kappa_prev;
    const long long c2 = kappa_cur - k;

    if (c1 < m) return enumerate_ball_half(d, p - 1).points();
    if (c1 == m) {
        if (p > d) return enumerate_ball_half(d, p - 1).points();  // exceptional k
        auto out = enumerate_ball_half(d, p - 1).points();
        out.push_back(all_ones(d));
        return out;
    }
    if (c1 < 2 * m) {
        // p > d here: p = d forces m = 1 and lands in the branch above.
        if (p == d) defect("unit shell cannot reach this offset");
        auto out = enumerate_ball_half(d, p - 1).points();
        Point a(static_cast<std::size_t>(d), m);
        a[0] = m - 1;
        a[1] = m + 1;
        out.push_back(std::move(a));
        return out;
    }
    if (p == d && c2 <= m) {
        auto out = enumerate_ball_half(d, p).points();
        std::erase(out, all_ones(d));
        return out;
    }
    if (p > d && c2 < m) {
        auto out = enumerate_ball_half(d, p).points();
        Point a(static_cast<std::size_t>(d), m);
        a[0] = m - 1;
        a[1] = m + 1;
        std::erase(out, a);
        return out;
    }
    if (p > d && c2 == m) {
        // Exceptional k: the optimum for budget k-1 already has the right
        // cardinality and fits under k.
        return construct_points(d, k - 1, delta_z(d, k - 1));
    }

    // Middle of the window: gadget orbits plus a balanced j-subset.
    const Gadget g = make_gadget(d, p);
    std::set<Point> reserved(g.all.begin(), g.all.end());
    const long long M = c1 * d / p;
    std::vector<Point> picked = greedy_orbit_fill(shell_orbits(d, p), reserved, M - 2);
    const long long j = M - static_cast<long long>(picked.size());
    if (j < 2 || j > static_cast<long long>(g.all.size()) - 2)
        defect("gadget window missed");
    auto sub = gadget_subset(d, g, j);
    if (!all_columns_equal(columns_of(d, sub), j * m))
        defect("gadget subset is not balanced");
    std::vector<Point> out = enumerate_ball_half(d, p - 1).points();
    out.insert(out.end(), picked.begin(), picked.end());
    out.insert(out.end(), sub.begin(), sub.end());
    return out;
}

// d == 2, p a multiple of 4.
std::vector<Point> build_dim2_doubly_even(long long k, const PackingAnswer& ans,
                                          long long kappa_prev) {
    const long long p = ans.p;
    const long long half = p / 2;
    const long long c1 = k - kappa_prev;
    const long long M = c1 / half;
    const Point a{half - 1, half + 1};
    const auto reserved_orbit = orbit(a).points();
    std::set<Point> reserved(reserved_orbit.begin(), reserved_orbit.end());
    std::vector<Point> picked = greedy_orbit_fill(shell_orbits(2, p), reserved, M);
    const long long gap = M - static_cast<long long>(picked.size());
    if (gap != 0 && gap != 1) defect("dimension-2 orbit fill missed the window");
    std::vector<Point> out = enumerate_ball_half(2, p - 1).points();
    out.insert(out.end(), picked.begin(), picked.end());
    if (gap == 1 && c1 % half != 0) out.push_back(a);
    // gap == 1 with half | c1 is the exceptional case: stop one short.
    return out;
}

// d == 2, p even with odd half.
std::vector<Point> build_dim2_singly_even(long long k, const PackingAnswer& ans,
                                          long long kappa_prev, long long kappa_cur) {
    const long long p = ans.p;
    const long long m = p / 2;
    const long long c1 = k - kappa_prev;
    const long long c2 = kappa_cur - k;

    if (p == 2) {
        auto out = enumerate_ball_half(2, 1).points();
        if (c1 >= 1) out.push_back(Point{1, 1});
        return out;
    }
    if (c1 <= m) return enumerate_ball_half(2, p - 1).points();  // c1 == m exceptional
    if (c1 < p) {
        auto out = enumerate_ball_half(2, p - 1).points();
        out.push_back(Point{m, m + 1});  // norm p+1, deliberately off the shell
        return out;
    }
    if (c2 == m) {
        // Exceptional k: drop a whole shell-p orbit from the full ball.
        auto out = enumerate_ball_half(2, p).points();
        const auto shell = enumerate_shell_half(2, p).points();
        const auto dropped = orbit(shell.front()).points();
        for (const Point& y : dropped) std::erase(out, y);
        return out;
    }
    if (c2 < m) {
        auto out = enumerate_ball_half(2, p).points();
        std::erase(out, Point{m - 1, m});  // norm p-1, breaks the sandwich
        return out;
    }

    // Middle of the window: c1 >= p and c2 > m.
    std::vector<Point> out = enumerate_ball_half(2, p - 1).points();
    if (p == 6) {
        out.push_back(Point{1, 5});
        out.push_back(Point{5, 1});
        return out;
    }
    if (p < 10) defect("unexpected singly even shell in the middle regime");
    const Point a{m - 2, m + 2}, b{m - 2, -(m + 2)}, c{m + 4, m - 4};
    std::vector<Point> gadget;
    for (const Point& x : {a, b, c}) {
        auto orb = orbit(x).points();
        gadget.insert(gadget.end(), orb.begin(), orb.end());
    }
    std::sort(gadget.begin(), gadget.end());
    gadget.erase(std::unique(gadget.begin(), gadget.end()), gadget.end());
    if (gadget.size() != 6) defect("two-dimensional gadget must have six points");
    std::set<Point> reserved(gadget.begin(), gadget.end());
    const long long M = c1 / m;
    std::vector<Point> picked = greedy_orbit_fill(shell_orbits(2, p), reserved, M - 2);
    const long long j = M - static_cast<long long>(picked.size());
    std::vector<Point> sub;
    switch (j) {
        case 2: sub = {a, tau(a)}; break;
        case 3: sub = {a, canonical_half(b), c}; break;
        case 4: sub = {a, tau(a), canonical_half(b), canonical_half(tau(b))}; break;
        default: defect("two-dimensional gadget window missed");
    }
    if (!all_columns_equal(columns_of(2, sub), j * m))
        defect("two-dimensional gadget subset is not balanced");
    out.insert(out.end(), picked.begin(), picked.end());
    out.insert(out.end(), sub.begin(), sub.end());
    return out;
}

std::vector<Point> construct_points(int d, long long k, const PackingAnswer& ans) {
    const BallStats prev = ball_stats(d, ans.p - 1);
    const BallStats cur = ball_stats(d, ans.p);
    if (d == 2) {
        if (ans.p % 2 == 1) return build_nondivisor(d, k, ans, prev.kappa);
        if (ans.p % 4 == 0) return build_dim2_doubly_even(k, ans, prev.kappa);
        return build_dim2_singly_even(k, ans, prev.kappa, cur.kappa);
    }
    if (ans.p % d != 0) return build_nondivisor(d, k, ans, prev.kappa);
    return build_divisor_highdim(d, k, ans, prev.kappa, cur.kappa);
}

}  // namespace

ExtremalWitness construct_extremal(int d, long long k) {
    PackingAnswer ans = delta_z(d, k);  // validates d, k
    std::vector<Point> pts = construct_points(d, k, ans);
    HalfPointSet set = HalfPointSet::of(d, std::move(pts));
    const long long kap = kappa(set);
    if (static_cast<long long>(set.size()) != ans.delta)
        defect("witness cardinality differs from delta_z");
    if (kap > k) defect("witness kappa exceeds the budget");
    return ExtremalWitness{std::move(set), d, k, ans.delta, kap};
}

bool sandwich_holds(const HalfPointSet& X, int d, long long k) {
    if (X.empty() || X.dim() != d) return false;
    const long long p = locate_shell(d, k);
    const auto inner = enumerate_ball_half(d, p - 1).points();
    const auto outer = enumerate_ball_half(d, p).points();
    return std::includes(X.points().begin(), X.points().end(), inner.begin(), inner.end()) &&
           std::includes(outer.begin(), outer.end(), X.points().begin(), X.points().end());
}

bool sandwich_exists(int d, long long k) {
    if (d > 2) {
        locate_shell(d, k);  // argument validation
        return true;
    }
    const long long p = locate_shell(d, k);
    if (p == 2 || p % 2 == 1 || (p / 2) % 2 == 0) return true;
    const long long half = p / 2;
    const long long c1 = k - ball_stats(2, p - 1).kappa;
    const long long c2 = ball_stats(2, p).kappa - k;
    return c1 != half + 1 && c2 != half - 1;
}

bool is_unique_optimum(int d, long long k) {
    if (d < 2) throw std::invalid_argument("is_unique_optimum: d must be >= 2");
    if (k < 1) throw std::invalid_argument("is_unique_optimum: k must be >= 1");
    long long kap = 0;
    for (long long p = 1; kap < k; ++p)
        kap = ball_stats(d, p).kappa;
    return kap == k;
}

ReplacementFamily replacement_family(const Point& z) {
    const int d = static_cast<int>(z.size());
    if (d < 2) throw std::invalid_argument("replacement_family: need dimension >= 2");
    if (!is_primitive(z)) throw std::invalid_argument("replacement_family: z must be primitive");
    if (!in_half_set(z)) throw std::invalid_argument("replacement_family: z must lie in the half set");

    const HalfPointSet orb = orbit(z);
    const long long s = static_cast<long long>(orb.size());
    if (d % s != 0) defect("orbit size does not divide the dimension");
    const long long target = kappa(orb);

    std::vector<HalfPointSet> blocks{orb};
    std::set<Point> taken(orb.points().begin(), orb.points().end());

    long long first_nonzero = -1;
    for (int i = 0; i < d; ++i)
        if (z[static_cast<std::size_t>(i)] != 0) { first_nonzero = i; break; }

    for (long long j = 2; j <= d / s; ++j) {
        const long long base = (j - 1) * s;
        bool placed = false;
        // Flip one nonzero coordinate inside the (j-1)-th period, starting
        // at the first nonzero offset, and keep whatever selection yields a
        // fresh balanced block.
        for (long long u = 0; u < s && !placed; ++u) {
            const long long t = (first_nonzero + u) % s;
            const std::size_t pos = static_cast<std::size_t>(base + t);
            if (z[pos] == 0) continue;
            Point y = z;
            y[pos] = -y[pos];
            std::vector<Point> block;
            Point cur = y;
            for (long long i = 0; i < s; ++i) {
                block.push_back(canonical_half(cur));
                cur = tau(cur);
            }
            std::sort(block.begin(), block.end());
            if (std::adjacent_find(block.begin(), block.end()) != block.end()) continue;
            bool fresh = std::none_of(block.begin(), block.end(),
                                      [&](const Point& q) { return taken.count(q) != 0; });
            if (!fresh) continue;
            if (!all_columns_equal(columns_of(d, block), target)) continue;
            taken.insert(block.begin(), block.end());
            blocks.push_back(HalfPointSet::of(d, std::move(block)));
            placed = true;
        }
        if (!placed)
            throw std::runtime_error("replacement_family: no disjoint balanced block found");
    }

    std::vector<Point> all(taken.begin(), taken.end());
    ReplacementFamily fam;
    fam.all = HalfPointSet::of(d, std::move(all));
    fam.blocks = std::move(blocks);
    if (static_cast<long long>(fam.all.size()) != d)
        defect("replacement family size differs from the dimension");
    return fam;
}

}  // namespace primpack
