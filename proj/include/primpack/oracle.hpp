#pragma once

#include <cstddef>

#include "primpack/bigint.hpp"
#include "primpack/lattice.hpp"

namespace primpack {

/// Instance-size caps.  The oracle is a desk-scale instrument; instances
/// beyond these limits raise resource_limit_error instead of thrashing.
struct OracleLimits {
    std::size_t candidate_cap = 1'000'000;  // max number of candidate points
    std::size_t state_cap = 10'000'000;     // max size of the (k+1)^d budget lattice
};

struct OracleResult {
    long long max_size;
    BigInt optimum_count;  // number of distinct optimal subsets
    HalfPointSet witness;  // one optimum, deterministic
};

/// Every half-lattice point that can appear in a feasible set: primitive,
/// |x_i| <= k per coordinate (and hence norm1 <= d*k), lexicographic order.
HalfPointSet candidate_points(int d, long long k, const OracleLimits& limits = {});

/// Exact maximum of |X| over X subseteq candidates with per-coordinate
/// absolute column sums at most k, by 0/1 knapsack DP over the (k+1)^d
/// budget lattice.  Counts all optimal subsets and reconstructs one witness
/// by deterministic backtracking that prefers exclusion on ties.
OracleResult solve_exact(int d, long long k, const OracleLimits& limits = {});

/// Same DP over a caller-supplied item list (order-independence tests).
OracleResult solve_with_items(int d, long long k, const std::vector<Point>& items,
                              const OracleLimits& limits = {});

/// Maximum |X| over feasible X sandwiched between B(d,p-1) and B(d,p)
/// where p = locate_shell(d,k): DP over the residual budget with shell-p
/// points as the only items.
long long max_sandwiched(int d, long long k, const OracleLimits& limits = {});

}  // namespace primpack
