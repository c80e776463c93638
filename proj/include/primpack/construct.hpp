#pragma once

#include <vector>

#include "primpack/lattice.hpp"
#include "primpack/packing.hpp"

namespace primpack {

/// A set of primitive half-lattice points witnessing delta_z(d,k).
struct ExtremalWitness {
    HalfPointSet set;
    int d;
    long long k;
    long long claimed_delta;    // = |set| = delta_z(d,k)
    long long kappa_achieved;   // = kappa(set) <= k
};

/// The norm-p point with r = p mod d leading coordinates ceil(p/d) and the
/// rest floor(p/d).  Primitive since the two values are consecutive.
/// Rejects d | p.
Point staircase_point(int d, long long p);

/// j distinct points from the orbit of the staircase point, chosen so that
/// kappa equals ceil(j*p/d) exactly.  s_chain(d,p,0) is empty.
HalfPointSet s_chain(int d, long long p, int j);

/// Builds a witness set of cardinality delta_z(d,k) with kappa <= k,
/// dispatching over the shell-p regime: orbit filling plus a staircase
/// chain when d does not divide p, gadget orbits with balanced subsets when
/// it does, and the dedicated two-dimensional constructions for even p.
/// Greedy orbit selection is lexicographic by minimal element and skips the
/// reserved gadget/staircase orbits.
ExtremalWitness construct_extremal(int d, long long k);

/// True iff B(d,p-1) subseteq X subseteq B(d,p) with p = locate_shell(d,k).
bool sandwich_holds(const HalfPointSet& X, int d, long long k);

/// Closed-form predicate: does some optimal set satisfy the sandwich?
/// Always true for d > 2; for d = 2 it fails exactly when p is even, p/2 is
/// odd, p > 2, and k sits at one of the two off-by-one offsets.
bool sandwich_exists(int d, long long k);

/// True iff the optimum is unique, i.e. k = kappa(B(d,p)) for some p.
bool is_unique_optimum(int d, long long k);

/// d points of 1-norm ||z||_1 partitioned into d/|orbit(z)| blocks, each
/// block with every absolute column sum equal to kappa(orbit(z)) and lying
/// inside the orbit of some half-lattice point.
struct ReplacementFamily {
    HalfPointSet all;                   // the d points
    std::vector<HalfPointSet> blocks;   // the partition
};
ReplacementFamily replacement_family(const Point& z);

}  // namespace primpack
