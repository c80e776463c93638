#pragma once

#include <vector>

#include "primpack/bigint.hpp"
#include "primpack/counting.hpp"

namespace primpack {

/// Closed-form answer to the packing problem for one (d, k).
struct PackingAnswer {
    int d;
    long long k;
    long long p;       // shell index: smallest p with k < kappa(B(d,p))
    Rational lambda;   // linear interpolant between consecutive ball values
    bool exceptional;  // k in the exception set E
    long long delta;   // delta_z(d,k) = floor(lambda) - [exceptional]
};

/// Smallest p >= 1 with k < kappa(B(d,p) inter P^d_o).  Requires d >= 2,
/// k >= 1; always returns p >= 2 since kappa(B(d,1)) = 1.
long long locate_shell(int d, long long k);

/// lambda(d,k) = |B(d,p-1)| + (k - kappa(B(d,p-1))) * d/p, exact.
Rational lambda_value(int d, long long k);

/// Membership of k in the exception set E for dimension d.
bool is_exceptional(int d, long long k);

/// Full closed form, delta = floor(lambda) - (1 if exceptional).
PackingAnswer delta_z(int d, long long k);

/// All exceptional k <= K, ascending, generated shell by shell.
std::vector<long long> exceptions_up_to(int d, long long K);

struct DensityReport {
    long long count;         // |E inter [1, K]|
    double normalized_ratio; // count/K^(1/(d+1)) for d > 2, count/K for d = 2
};
DensityReport exception_density_report(int d, long long K);

}  // namespace primpack
