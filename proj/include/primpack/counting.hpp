#pragma once

#include <functional>
#include <vector>

#include "primpack/bigint.hpp"

namespace primpack {

/// Closed-form per-ball counts for one (d, p).
struct BallStats {
    int d;
    long long p;
    long long half_count;  // |B(d,p) inter P^d_o|
    long long kappa;       // kappa of that intersection

    bool operator==(const BallStats&) const = default;
};

/// Number of primitive points of 1-norm p in the open positive orthant of
/// dimension d, via the Stirling/Jordan sum
///   c_psi(p,d) = (1/(d-1)!) * sum_i s(d,i) J_{i-1}(p).
/// The sum is accumulated exactly and must be divisible by (d-1)!.
long long c_psi(long long p, int d);

/// Same quantity through Moebius inversion over the divisors of p:
///   c_psi(p,d) = sum_{q|p} mu(q) C(p/q - 1, d - 1).
long long c_psi_moebius(long long p, int d);

/// Brute-force count over all compositions of p into d positive parts with
/// gcd 1.  Independent of both formula paths; also backs the CLI
/// --method enumerate.
long long c_psi_enumerate(long long p, int d);

/// |S(d,p) inter P^d_o| = (1/2) sum_j 2^j C(d,j) c_psi(p,j).
long long shell_half_count(int d, long long p);

/// Accumulated shell counts and the exact kappa of the ball.
BallStats ball_stats(int d, long long p);

/// sum over primitive x in B(d,p) (both half lattices) of f(norm1(x)).
Rational ball_weighted_sum(const std::function<Rational(long long)>& f, int d, long long p);

/// c_psi(p,d) * (d-1)! * zeta(d) / p^(d-1); tends to 1 as p grows.
double cpsi_ratio(int d, long long p, double zeta_tol = 1e-9);

/// Fixed-p growth ratios as d runs over a list.
struct GrowthRow {
    int d;
    Rational ball_ratio;      // half_count * p! / (2^(p-1) d^p)
    Rational kappa_ratio;     // kappa * (p-1)! / (2^(p-1) d^(p-1))
    Rational combined_ratio;  // half_count / (d * kappa), tends to 1/p
};
std::vector<GrowthRow> dimension_growth_report(long long p, const std::vector<int>& dims);

}  // namespace primpack
