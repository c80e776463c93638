#include <doctest.h>

#include <cmath>
#include <numbers>
#include <numeric>

#include "primpack/numtheory.hpp"

using namespace primpack;

TEST_CASE("factorize basics") {
    CHECK(factorize(1).empty());
    CHECK(factorize(12) == std::vector<PrimePower>{{2, 2}, {3, 1}});
    CHECK(factorize(97) == std::vector<PrimePower>{{97, 1}});
    CHECK(factorize(720) == std::vector<PrimePower>{{2, 4}, {3, 2}, {5, 1}});
    CHECK_THROWS_AS(factorize(0), std::invalid_argument);
    CHECK_THROWS_AS(factorize(-5), std::invalid_argument);
}

TEST_CASE("moebius values") {
    CHECK(moebius(1) == 1);
    CHECK(moebius(4) == 0);
    CHECK(moebius(6) == 1);
    CHECK(moebius(30) == -1);
    CHECK_THROWS_AS(moebius(0), std::invalid_argument);
}

TEST_CASE("jordan totient values and conventions") {
    CHECK(jordan_totient(1, 6) == 2);
    CHECK(jordan_totient(2, 4) == 12);
    CHECK(jordan_totient(0, 6) == 0);
    CHECK(jordan_totient(0, 1) == 1);
    CHECK(jordan_totient(3, 1) == 1);
    CHECK_THROWS_AS(jordan_totient(1, 0), std::invalid_argument);
    // J_1 is Euler's totient.
    long long phi = 0;
    for (long long i = 1; i <= 36; ++i)
        if (std::gcd(i, 36LL) == 1) ++phi;
    CHECK(jordan_totient(1, 36) == phi);
    CHECK(jordan_totient_big(5, 30) == 23436248);  // (2^5-1)(3^5-1)(5^5-1)
    CHECK(jordan_totient_big(9, 1000003) ==
          boost::multiprecision::pow(BigInt(1000003), 9) - 1);
}

TEST_CASE("jordan totient overflow is loud") {
    CHECK_THROWS_AS(jordan_totient(9, 1000003), std::overflow_error);
}

TEST_CASE("stirling numbers of the first kind") {
    CHECK(stirling_first(3, 3) == 1);
    CHECK(stirling_first(3, 0) == 0);
    CHECK(stirling_first(4, 2) == 11);
    CHECK(stirling_first(2, 5) == 0);
    CHECK(stirling_first(0, 0) == 1);
    // Row d sums to the falling factorial (1)_d, which vanishes for d >= 2.
    for (int d = 2; d <= 30; ++d) {
        BigInt sum = 0;
        for (int i = 0; i <= d; ++i) sum += stirling_first(d, i);
        CHECK(sum == 0);
    }
}

TEST_CASE("binomial coefficients") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(-2, 1) == 0);
    CHECK(binomial(60, 30) == BigInt("118264581564861424"));
}

TEST_CASE("zeta by direct summation") {
    CHECK(zeta_approx(2, 1e-9) == doctest::Approx(std::numbers::pi * std::numbers::pi / 6).epsilon(1e-9));
    CHECK(zeta_approx(3, 1e-9) == doctest::Approx(1.2020569031595943).epsilon(1e-9));
    CHECK(zeta_approx(10, 1e-9) == doctest::Approx(1.0009945751278181).epsilon(1e-9));
    CHECK_THROWS_AS(zeta_approx(1, 1e-6), std::invalid_argument);
}

TEST_CASE("divisor sums of the jordan totient telescope") {
    for (long long p = 1; p <= 10000; ++p) {
        long long sum = 0;
        for (long long q : divisors(p)) sum += jordan_totient(1, q);
        REQUIRE(sum == p);
    }
    for (int q = 0; q <= 3; ++q)
        for (long long p = 1; p <= 1000; ++p) {
            long long sum = 0;
            for (long long m : divisors(p)) sum += jordan_totient(q, m);
            REQUIRE(sum == checked_pow(p, q));
        }
}

TEST_CASE("moebius inversion recovers the totient") {
    for (long long p = 1; p <= 1000; ++p) {
        long long sum = 0;
        for (long long q : divisors(p)) sum += moebius(q) * (p / q);
        REQUIRE(sum == jordan_totient(1, p));
    }
}
