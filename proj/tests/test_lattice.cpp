#include <doctest.h>

#include <numeric>
#include <set>

#include "primpack/counting.hpp"
#include "primpack/lattice.hpp"

using namespace primpack;

TEST_CASE("norm and primitivity") {
    CHECK(norm1({1, -2, 3}) == 6);
    CHECK(norm1({0, 0}) == 0);
    CHECK(norm1({2, 1}) == 3);
    CHECK(!is_primitive({2, 4}));
    CHECK(is_primitive({0, 0, 1}));
    CHECK(!is_primitive({0, 0}));
}

TEST_CASE("half set membership") {
    CHECK(in_half_set({0, 3, -1}));
    CHECK(!in_half_set({-1, 5}));
    CHECK(!in_half_set({0, 0}));
}

TEST_CASE("tau action") {
    CHECK(tau({1, -2, 3}) == Point{3, 1, -2});
    CHECK(tau({3, 1, -2}) == Point{2, -3, -1});
    CHECK(tau({1, 1}) == Point{1, 1});
    // tau keeps the half set stable: the new first coordinate is |x_d|, or
    // the old leading sign when x_d = 0.
    for (const Point& x : enumerate_ball_half(3, 5))
        CHECK(in_half_set(tau(x)));
}

TEST_CASE("tau has order d") {
    for (int d = 2; d <= 6; ++d)
        for (const Point& x : enumerate_ball_half(d, d <= 4 ? 8 : 5)) {
            Point y = x;
            for (int i = 0; i < d; ++i) y = tau(y);
            REQUIRE(y == x);
        }
}

TEST_CASE("orbits") {
    CHECK(orbit({1, 1}).points() == std::vector<Point>{{1, 1}});
    auto o3 = orbit({1, -2, 3});
    CHECK(o3.size() == 3);
    CHECK(o3.contains({3, 1, -2}));
    CHECK(o3.contains({2, -3, -1}));
    auto o4 = orbit({1, 0, 1, 0});
    CHECK(o4.points() == std::vector<Point>{{0, 1, 0, 1}, {1, 0, 1, 0}});
    CHECK_THROWS_AS(orbit({2, 4}), std::invalid_argument);
}

TEST_CASE("orbit size divides d and norms match") {
    for (int d = 2; d <= 5; ++d)
        for (const Point& x : enumerate_ball_half(d, 6)) {
            auto orb = orbit(x);
            REQUIRE(static_cast<int>(d % orb.size()) == 0);
            for (const Point& y : orb) REQUIRE(norm1(y) == norm1(x));
        }
}

TEST_CASE("orbits partition shells") {
    for (int d = 2; d <= 4; ++d)
        for (long long p = 1; p <= 6; ++p) {
            auto shell = enumerate_shell_half(d, p);
            std::set<Point> seen;
            for (const Point& x : shell) {
                if (seen.count(x)) continue;
                for (const Point& y : orbit(x)) {
                    REQUIRE(shell.contains(y));
                    REQUIRE(!seen.count(y));
                    seen.insert(y);
                }
            }
            REQUIRE(seen.size() == shell.size());
        }
}

TEST_CASE("shell enumeration") {
    CHECK(enumerate_shell_half(2, 3).points() ==
          std::vector<Point>{{1, -2}, {1, 2}, {2, -1}, {2, 1}});
    CHECK(enumerate_shell_half(2, 1).points() == std::vector<Point>{{0, 1}, {1, 0}});
    CHECK(enumerate_shell_half(3, 6).size() == 48);
    CHECK_THROWS_AS(enumerate_shell_half(1, 3), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_shell_half(2, 0), std::invalid_argument);
}

TEST_CASE("ball enumeration") {
    CHECK(enumerate_ball_half(2, 2).points() ==
          std::vector<Point>{{0, 1}, {1, -1}, {1, 0}, {1, 1}});
    CHECK(enumerate_ball_half(3, 1).size() == 3);
    CHECK(enumerate_ball_half(2, 5).size() == 20);
}

TEST_CASE("enumerated points are canonical and duplicate-free") {
    for (int d = 2; d <= 4; ++d) {
        auto ball = enumerate_ball_half(d, 7);
        const auto& pts = ball.points();
        for (std::size_t i = 0; i < pts.size(); ++i) {
            REQUIRE(is_primitive(pts[i]));
            REQUIRE(in_half_set(pts[i]));
            if (i) REQUIRE(pts[i - 1] < pts[i]);
        }
    }
}

TEST_CASE("kappa") {
    CHECK(kappa(HalfPointSet::of(2, {})) == 0);
    CHECK(kappa(HalfPointSet::of(2, {{1, 2}, {2, 1}})) == 3);
    CHECK(kappa(enumerate_ball_half(2, 3)) == 9);
}

TEST_CASE("kappa bound and balance") {
    // kappa >= (sum of norms)/d, with equality exactly for balanced sets.
    auto check_set = [](const HalfPointSet& X) {
        long long total = 0;
        for (const Point& x : X) total += norm1(x);
        const int d = X.dim();
        REQUIRE(kappa(X) >= (total + d - 1) / d);
        bool balanced = true;
        for (long long c : X.column_sums()) balanced &= c == X.column_sums()[0];
        REQUIRE((kappa(X) * d == total) == balanced);
    };
    check_set(enumerate_ball_half(3, 4));
    check_set(HalfPointSet::of(2, {{1, 2}, {2, -1}}));  // balanced but not C-invariant
    check_set(HalfPointSet::of(2, {{1, 2}}));
    check_set(HalfPointSet::of(3, {{1, 1, 0}, {0, 1, 1}}));
    // Every C-invariant set is balanced.
    for (const Point& x : enumerate_shell_half(4, 5)) {
        auto orb = orbit(x);
        for (long long c : orb.column_sums()) REQUIRE(c == orb.column_sums()[0]);
    }
}

TEST_CASE("half point set validation") {
    CHECK_THROWS_AS(HalfPointSet::of(2, {{2, 4}}), std::invalid_argument);
    CHECK_THROWS_AS(HalfPointSet::of(2, {{-1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(HalfPointSet::of(2, {{1, 2}, {1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(HalfPointSet::of(2, {{1, 2, 3}}), std::invalid_argument);
    auto s = HalfPointSet::of(2, {{2, 1}, {1, -2}});
    CHECK(s.column_sums() == std::vector<long long>{3, 3});
}

TEST_CASE("ball enumeration is the union of member orbits") {
    for (int d = 2; d <= 4; ++d) {
        auto ball = enumerate_ball_half(d, 5);
        for (const Point& x : ball)
            for (const Point& y : orbit(x)) REQUIRE(ball.contains(y));
    }
}
