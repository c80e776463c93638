#include <doctest.h>

#include "primpack/packing.hpp"

using namespace primpack;

TEST_CASE("locate_shell") {
    CHECK(locate_shell(2, 11) == 4);
    CHECK(locate_shell(3, 6) == 3);
    for (int d = 2; d <= 6; ++d) CHECK(locate_shell(d, 1) == 2);
    CHECK(locate_shell(2, 9) == 4);   // k equal to kappa(B(2,3))
    CHECK(locate_shell(2, 8) == 3);
    CHECK_THROWS_AS(locate_shell(1, 5), std::invalid_argument);
    CHECK_THROWS_AS(locate_shell(2, 0), std::invalid_argument);
}

TEST_CASE("lambda interpolant") {
    CHECK(lambda_value(2, 11) == 9);
    CHECK(lambda_value(3, 6) == 10);
    CHECK(lambda_value(2, 9) == 8);  // endpoint: |B(2,3)|
    CHECK(lambda_value(2, 10) == Rational(17, 2));
    // At every kappa(B(d,p)) the interpolant hits the ball cardinality.
    for (int d = 2; d <= 5; ++d)
        for (long long p = 1; p <= 6; ++p) {
            auto s = ball_stats(d, p);
            REQUIRE(lambda_value(d, s.kappa) == s.half_count);
        }
}

TEST_CASE("exceptional k detection") {
    CHECK(is_exceptional(2, 11));
    CHECK(is_exceptional(3, 135));
    CHECK(!is_exceptional(2, 13));
    CHECK(is_exceptional(2, 15));
    CHECK(!is_exceptional(2, 9));
    CHECK(!is_exceptional(3, 134));
    CHECK(is_exceptional(3, 227));
    CHECK(!is_exceptional(3, 228));
}

TEST_CASE("delta_z closed form") {
    CHECK(delta_z(2, 11).delta == 8);
    CHECK(delta_z(3, 6).delta == 10);
    CHECK(delta_z(4, 8).delta == 17);
    CHECK(delta_z(6, 26).delta == 66);
    auto a = delta_z(2, 11);
    CHECK(a.p == 4);
    CHECK(a.lambda == 9);
    CHECK(a.exceptional);
}

TEST_CASE("small-k closed form matches the floor formula") {
    for (int d = 2; d <= 8; ++d)
        for (long long k = 1; k < 2 * d; ++k)
            REQUIRE(delta_z(d, k).delta == (k + 1) * d / 2);
}

TEST_CASE("delta at ball endpoints equals the ball cardinality") {
    for (int d = 2; d <= 5; ++d)
        for (long long p = 1; p <= 8; ++p) {
            auto s = ball_stats(d, p);
            REQUIRE(delta_z(d, s.kappa).delta == s.half_count);
        }
}

TEST_CASE("delta is nondecreasing with bounded increments") {
    for (int d = 2; d <= 5; ++d) {
        long long prev = delta_z(d, 1).delta;
        for (long long k = 2; k <= 80; ++k) {
            long long cur = delta_z(d, k).delta;
            REQUIRE(cur >= prev);
            REQUIRE(cur - prev <= d);
            prev = cur;
        }
    }
}

TEST_CASE("no exceptions below shell 2d for d > 2") {
    for (int d = 3; d <= 6; ++d)
        for (long long k = 1; k <= 60; ++k) {
            auto a = delta_z(d, k);
            if (a.p < 2 * d) REQUIRE(!a.exceptional);
        }
}

TEST_CASE("exception lists") {
    CHECK(exceptions_up_to(2, 50) == std::vector<long long>{11, 15, 40, 46});
    CHECK(exceptions_up_to(3, 300) == std::vector<long long>{135, 227});
    CHECK(exceptions_up_to(3, 100).empty());
    // Generated shell by shell, but must agree with the pointwise test.
    for (int d : {2, 3, 4}) {
        auto listed = exceptions_up_to(d, 200);
        std::vector<long long> scanned;
        for (long long k = 1; k <= 200; ++k)
            if (is_exceptional(d, k)) scanned.push_back(k);
        REQUIRE(listed == scanned);
    }
}

TEST_CASE("counting overflow is loud, not wrapped") {
    CHECK_THROWS_AS(shell_half_count(40, 40), std::overflow_error);
    CHECK_THROWS_AS(ball_stats(40, 40), std::overflow_error);
}

TEST_CASE("exception density reports") {
    auto r = exception_density_report(3, 300);
    CHECK(r.count == 2);
    auto r2 = exception_density_report(2, 50);
    CHECK(r2.count == 4);
    CHECK(r2.normalized_ratio == doctest::Approx(0.08));
    auto r3 = exception_density_report(2, 10);
    CHECK(r3.count == 0);
    CHECK(r3.normalized_ratio == 0.0);
}
