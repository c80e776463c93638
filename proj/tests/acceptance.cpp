// Acceptance suite: runs every criterion at its stated tolerance and prints
// one PASS/FAIL line per criterion.  Exit status is the number of failures.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "primpack/construct.hpp"
#include "primpack/counting.hpp"
#include "primpack/numtheory.hpp"
#include "primpack/oracle.hpp"
#include "primpack/packing.hpp"
#include "primpack/zonotope.hpp"

using namespace primpack;

namespace {

struct Check {
    bool ok = true;
    std::string note;

    void fail(const std::string& msg) {
        ok = false;
        if (!note.empty()) note += "; ";
        note += msg;
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int failures = 0;

void report(int id, const std::string& label, const Check& c) {
    if (c.ok) {
        std::printf("PASS criterion %d: %s\n", id, label.c_str());
    } else {
        ++failures;
        std::printf("FAIL criterion %d: %s -- %s\n", id, label.c_str(), c.note.c_str());
    }
    std::fflush(stdout);
}

// Reference grid: delta_z(d, 2d + j) for d = 2..6, j = 0..14.
const long long kTable[5][15] = {
    {4, 5, 6, 6, 7, 8, 8, 8, 9, 10, 10, 10, 11, 12, 12},
    {10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24},
    {17, 18, 20, 21, 22, 24, 25, 26, 28, 29, 30, 32, 33, 34, 36},
    {26, 28, 30, 31, 33, 35, 36, 38, 40, 41, 43, 45, 46, 48, 50},
    {38, 40, 42, 44, 46, 48, 50, 52, 54, 56, 58, 60, 62, 64, 66},
};

void criterion1_table() {
    Check c;
    auto t0 = std::chrono::steady_clock::now();
    for (int d = 2; d <= 6; ++d)
        for (int j = 0; j <= 14; ++j) {
            const long long k = 2 * d + j;
            PackingAnswer a = delta_z(d, k);
            if (a.delta != kTable[d - 2][j])
                c.fail("delta(" + std::to_string(d) + "," + std::to_string(k) + ") = " +
                       std::to_string(a.delta) + ", reference " +
                       std::to_string(kTable[d - 2][j]));
            const bool want_star = d == 2 && (k == 11 || k == 15);
            if (a.exceptional != want_star)
                c.fail("star mismatch at (" + std::to_string(d) + "," + std::to_string(k) + ")");
            const bool want_bold = d == 2 && (k == 9 || k == 17);
            if (is_unique_optimum(d, k) != want_bold)
                c.fail("bold mismatch at (" + std::to_string(d) + "," + std::to_string(k) + ")");
        }
    double t = seconds_since(t0);
    if (t >= 5.0) c.fail("took " + std::to_string(t) + " s, budget 5 s");
    report(1, "table of delta_z values, 75 entries with stars and bolds, < 5 s", c);
}

void criterion2_exception_landmark() {
    Check c;
    auto exc = exceptions_up_to(3, 300);
    if (exc != std::vector<long long>{135, 227}) {
        std::ostringstream os;
        os << "exceptions_up_to(3,300) = [";
        for (long long v : exc) os << " " << v;
        os << " ], expected [ 135 227 ]";
        c.fail(os.str());
    }
    if (exc.empty() || exc.front() != 135) c.fail("smallest d=3 exception is not 135");
    report(2, "exception landmarks for d=3: {135, 227} up to 300", c);
}

std::map<std::pair<int, long long>, OracleResult> oracle_cache;

void criterion3_oracle_equivalence() {
    Check c;
    auto t0 = std::chrono::steady_clock::now();
    long long mismatches = 0;
    for (long long k = 1; k <= 40; ++k) {
        oracle_cache[{2, k}] = solve_exact(2, k);
        if (oracle_cache[{2, k}].max_size != delta_z(2, k).delta) ++mismatches;
    }
    for (long long k = 1; k <= 21; ++k) {
        oracle_cache[{3, k}] = solve_exact(3, k);
        if (oracle_cache[{3, k}].max_size != delta_z(3, k).delta) ++mismatches;
    }
    if (mismatches) c.fail(std::to_string(mismatches) + " formula/oracle mismatches");
    double t = seconds_since(t0);
    if (t >= 60.0) c.fail("took " + std::to_string(t) + " s, budget 60 s");
    report(3, "oracle equivalence on d=2, k<=40 and d=3, k<=21, < 60 s", c);
}

void criterion4_counting_agreement() {
    Check c;
    auto t0 = std::chrono::steady_clock::now();
    for (int d = 1; d <= 5; ++d)
        for (long long p = 1; p <= 25; ++p) {
            const long long brute = c_psi_enumerate(p, d);
            if (c_psi(p, d) != brute || c_psi_moebius(p, d) != brute) {
                c.fail("c_psi disagreement at p=" + std::to_string(p) +
                       ", d=" + std::to_string(d));
                break;
            }
        }
    for (int d = 2; d <= 5; ++d)
        for (long long p = 1; p <= 8; ++p) {
            auto ball = enumerate_ball_half(d, p);
            auto stats = ball_stats(d, p);
            if (stats.half_count != static_cast<long long>(ball.size()) ||
                stats.kappa != kappa(ball))
                c.fail("ball_stats disagreement at d=" + std::to_string(d) +
                       ", p=" + std::to_string(p));
        }
    double t = seconds_since(t0);
    if (t >= 30.0) c.fail("took " + std::to_string(t) + " s, budget 30 s");
    report(4, "triple counting agreement (d<=5, p<=25) and ball enumeration (p<=8), < 30 s", c);
}

void criterion5_small_k() {
    Check c;
    for (int d = 2; d <= 8; ++d)
        for (long long k = 1; k < 2 * d; ++k)
            if (delta_z(d, k).delta != (k + 1) * d / 2)
                c.fail("small-k failure at d=" + std::to_string(d) + ", k=" + std::to_string(k));
    report(5, "small-k closed form floor((k+1)d/2) for d<=8, k<2d", c);
}

void criterion6_uniqueness() {
    Check c;
    const std::set<long long> expect2{1, 3, 9, 17, 37};
    std::set<long long> endpoints2;
    for (long long p = 1; ball_stats(2, p).kappa <= 40; ++p)
        endpoints2.insert(ball_stats(2, p).kappa);
    if (endpoints2 != expect2) c.fail("d=2 endpoint set is not {1,3,9,17,37}");
    for (long long k = 1; k <= 40; ++k)
        if ((oracle_cache[{2, k}].optimum_count == 1) != (expect2.count(k) != 0))
            c.fail("uniqueness mismatch at d=2, k=" + std::to_string(k));
    std::set<long long> endpoints3;
    for (long long p = 1; ball_stats(3, p).kappa <= 21; ++p)
        endpoints3.insert(ball_stats(3, p).kappa);
    for (long long k = 1; k <= 21; ++k)
        if ((oracle_cache[{3, k}].optimum_count == 1) != (endpoints3.count(k) != 0))
            c.fail("uniqueness mismatch at d=3, k=" + std::to_string(k));
    report(6, "unique optimum exactly at the ball kappa endpoints on both grids", c);
}

void criterion7_sandwich() {
    Check c;
    if (max_sandwiched(2, 41) != 20) c.fail("max_sandwiched(2,41) != 20");
    if (delta_z(2, 41).delta != 21) c.fail("delta_z(2,41) != 21");
    for (long long k = 1; k <= 40; ++k)
        if (sandwich_exists(2, k) !=
            (max_sandwiched(2, k) == oracle_cache[{2, k}].max_size))
            c.fail("sandwich mismatch at d=2, k=" + std::to_string(k));
    for (long long k = 1; k <= 21; ++k)
        if (sandwich_exists(3, k) !=
            (max_sandwiched(3, k) == oracle_cache[{3, k}].max_size))
            c.fail("sandwich mismatch at d=3, k=" + std::to_string(k));
    report(7, "sandwich: 20 < 21 at (2,41) and predicate matches the oracle on both grids", c);
}

void criterion8_witnesses() {
    Check c;
    auto t0 = std::chrono::steady_clock::now();
    auto check_witness = [&](int d, long long k) {
        ExtremalWitness w = construct_extremal(d, k);
        if (static_cast<long long>(w.set.size()) != delta_z(d, k).delta ||
            kappa(w.set) > k)
            c.fail("invalid witness at d=" + std::to_string(d) + ", k=" + std::to_string(k));
    };
    for (int d = 2; d <= 6; ++d)
        for (long long k = 1; k <= 2 * d + 14; ++k) check_witness(d, k);
    for (long long k : {135, 227}) check_witness(3, k);
    for (long long k : {11, 15, 40, 46}) check_witness(2, k);
    double t = seconds_since(t0);
    if (t >= 30.0) c.fail("took " + std::to_string(t) + " s, budget 30 s");
    report(8, "valid witnesses for d<=6, k<=2d+14 plus the exceptional landmarks, < 30 s", c);
}

void criterion9_asymptotics() {
    Check c;
    const double ratio = cpsi_ratio(3, 1000);
    if (!(ratio >= 0.9 && ratio <= 1.1)) {
        std::ostringstream os;
        os << "cpsi_ratio(3,1000) = " << ratio
           << " outside [0.9, 1.1]: the pointwise ratio is zeta(3) times"
              " prod_{primes n | p} (1 - n^-2), which for p = 1000 is"
              " 0.72 * zeta(3); the ratio tends to 1 only on average over p";
        c.fail(os.str());
    }
    auto rows = dimension_growth_report(2, {2, 3, 5, 10, 50, 200, 500});
    for (const auto& row : rows)
        if (row.ball_ratio != 1)
            c.fail("ball_ratio not exactly 1 at d=" + std::to_string(row.d));
    const Rational target(1, 2);
    const Rational combined = rows.back().combined_ratio;
    if (boost::multiprecision::abs(combined - target) > Rational(1, 100) * target)
        c.fail("combined ratio at d=500 not within 2% of 1/2");
    double prev = 1e300;
    for (long long K : {100, 1000, 10000}) {
        auto rep = exception_density_report(2, K);
        if (rep.normalized_ratio >= prev)
            c.fail("density ratio not decreasing at K=" + std::to_string(K));
        prev = rep.normalized_ratio;
    }
    report(9, "asymptotic trends: cpsi ratio window, exact d^2 identity, density decay", c);
}

void criterion10_properties() {
    Check c;
    // tau has order d.
    for (int d = 2; d <= 6; ++d)
        for (const Point& x : enumerate_ball_half(d, d <= 4 ? 8 : 6)) {
            Point y = x;
            for (int i = 0; i < d; ++i) y = tau(y);
            if (y != x) {
                c.fail("tau^d not the identity in d=" + std::to_string(d));
                break;
            }
        }
    // Orbit sizes divide d; orbits are balanced (C-invariance implies it).
    for (int d = 2; d <= 5; ++d)
        for (const Point& x : enumerate_ball_half(d, 6)) {
            auto orb = orbit(x);
            if (d % orb.size() != 0) c.fail("orbit size does not divide d");
            long long total = 0;
            for (const Point& y : orb) total += norm1(y);
            if (kappa(orb) * d != total) c.fail("C-invariant orbit is not balanced");
        }
    // Balanced equality characterization on assorted small sets.
    for (int d = 2; d <= 4; ++d) {
        auto pts = enumerate_ball_half(d, 4).points();
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < std::min(pts.size(), i + 12); ++j) {
                auto X = HalfPointSet::of(d, {pts[i], pts[j]});
                long long total = norm1(pts[i]) + norm1(pts[j]);
                bool balanced = true;
                for (long long col : X.column_sums()) balanced &= col == X.column_sums()[0];
                if ((kappa(X) * d == total) != balanced) c.fail("balance equality broken");
                if (kappa(X) * d < total) c.fail("kappa below the norm average");
            }
    }
    // Composition identity.
    for (int d = 1; d <= 6; ++d)
        for (long long p = 1; p <= 40; ++p) {
            BigInt sum = 0;
            for (long long q : divisors(p)) sum += c_psi(p / q, d);
            if (sum != binomial(p - 1, d - 1)) c.fail("composition identity broken");
        }
    // DP is order independent.
    std::mt19937 rng(424242);
    for (auto [d, k] : {std::pair<int, long long>{2, 7}, {2, 11}, {3, 6}}) {
        auto base = oracle_cache.count({d, k}) ? oracle_cache[{d, k}] : solve_exact(d, k);
        auto items = candidate_points(d, k).points();
        std::shuffle(items.begin(), items.end(), rng);
        auto shuffled = solve_with_items(d, k, items);
        if (shuffled.max_size != base.max_size || shuffled.optimum_count != base.optimum_count)
            c.fail("DP result changed under item permutation");
    }
    report(10, "property suites: tau order, orbit divisibility, balance, compositions, DP order",
           c);
}

}  // namespace

int main() {
    criterion1_table();
    criterion2_exception_landmark();
    criterion3_oracle_equivalence();
    criterion4_counting_agreement();
    criterion5_small_k();
    criterion6_uniqueness();
    criterion7_sandwich();
    criterion8_witnesses();
    criterion9_asymptotics();
    criterion10_properties();
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    else std::printf("all criteria passed\n");
    return failures;
}
