#pragma once

#include <vector>

#include "deltacurve/arith.hpp"
#include "deltacurve/numbers.hpp"

namespace deltacurve {

/// Per-divisor cusp data for the coverings X_1(N) -> X_Delta(N) -> X_0(N).
/// e_total = e_p1 * e_p2 is the ramification over X_0(N) of a cusp with
/// d = (y, N); orbit_count cusps of X_Delta(N) sit over divisor d.
struct CuspOrbitData {
    long divisor = 1;
    Int orbit_count;  // phi(d) phi(N/d) / |pi_d(Delta)|
    Int e_total;      // (N/d, d)
    Int e_p1;         // |Delta| / |pi_d(Delta)|
    Int e_p2;         // e_total * |pi_d(Delta)| / |Delta|, always integral
};

struct CurveInvariants {
    long level = 1;
    SubgroupDelta delta;
    Int mu;
    Int nu2;
    Int nu3;
    Int nu_inf;
    Int genus;
};

// Index of the projective congruence subgroup: N prod_{p|N}(1+1/p) phi(N)/|Delta|.
Int index_mu(long level, const SubgroupDelta& delta);

// Elliptic point counts: solutions of b^2+1 = 0 (resp. b^2-b+1 = 0) mod N
// inside Delta, scaled by phi(N)/|Delta|.
Int nu2(long level, const SubgroupDelta& delta);
Int nu3(long level, const SubgroupDelta& delta);

std::vector<CuspOrbitData> cusp_orbits(long level, const SubgroupDelta& delta);
Int nu_inf(long level, const SubgroupDelta& delta);

/// Full invariant record; the genus is evaluated in exact rational arithmetic
/// and checked integral and nonnegative (a violation signals a bug, never
/// valid input).
CurveInvariants curve_invariants(long level, const SubgroupDelta& delta);

long genus_of(long level, const SubgroupDelta& delta);

}  // namespace deltacurve
