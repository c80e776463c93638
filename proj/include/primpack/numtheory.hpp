#pragma once

#include <utility>
#include <vector>

#include "primpack/bigint.hpp"
#include "primpack/checked.hpp"

namespace primpack {

/// One prime-power factor of an integer.
struct PrimePower {
    long long prime;
    int exponent;

    bool operator==(const PrimePower&) const = default;
};

/// Prime factorization of n >= 1 by trial division, primes ascending.
/// factorize(1) is the empty product.
std::vector<PrimePower> factorize(long long n);

/// Moebius function: 0 if n has a squared prime factor, else (-1)^(#primes).
int moebius(long long n);

/// Jordan totient J_q(p) = p^q * prod_{prime n | p} (1 - 1/n^q), exactly.
/// Convention: J_0(1) = 1 and J_0(p) = 0 for p >= 2.
long long jordan_totient(int q, long long p);

/// Same value without the 64-bit range restriction.
BigInt jordan_totient_big(int q, long long p);

/// Signed Stirling numbers of the first kind, s(d, i).
/// s(i, i) = 1, s(d, 0) = 0 for d > 0, and s(d, i) = 0 for i > d.
/// Rows are memoized behind a lock; values grow factorially.
BigInt stirling_first(int d, int i);

/// Binomial coefficient; 0 whenever n < 0 or n < k.
BigInt binomial(long long n, long long k);

/// zeta(d) by direct summation, stopping once the integral tail bound
/// (N+1)^(1-d)/(d-1) drops to tol or below.  Requires d >= 2, tol > 0.
double zeta_approx(int d, double tol);

/// All divisors of n >= 1, ascending.
std::vector<long long> divisors(long long n);

}  // namespace primpack
