#pragma once

// Minimal non-negative solutions of a single homogeneous linear Diophantine
// equation, and the generator data derived from them: the generating set of
// the cone A(z) = { x in N^p : z.x >= 0 } and the decomposition of the
// feasible set { x : (b-a).x >= alpha+beta } into minimal points plus cone.

#include <vector>

#include "diomon/instance.hpp"
#include "diomon/ints.hpp"

namespace diomon {

using IntVec = std::vector<Int>;  // equation coefficients, any sign
using NatVec = std::vector<Int>;  // lattice points, entry-wise >= 0
using VecSet = std::vector<NatVec>;  // lex-sorted, duplicate-free

// Enumeration cap on the coordinate sum of a candidate solution:
// sum_i |coeffs_i| + 1. For a coefficient vector (z,-1) this equals the
// classical sum|z_i| + 2 cap on minimal solutions of z.x - x_{p+1} = 0, and
// for (b-a,-1,-(alpha+beta)) it equals sum|b_i-a_i| + alpha + beta + 2; every
// componentwise-minimal non-zero solution lies within it.
Int pottier_budget(const IntVec& coeffs);

// All componentwise-minimal non-zero x in N^q with coeffs.x = 0 and
// coordinate sum <= budget, lex-sorted. With budget >= pottier_budget(coeffs)
// this is exactly the set of minimal non-zero solutions.
VecSet minimal_nonzero_solutions(const IntVec& coeffs, Int budget);

// minimal_nonzero_solutions at the default budget pottier_budget(coeffs).
VecSet minimal_homogeneous_solutions(const IntVec& coeffs);

// Generating set of A(z): projections (last coordinate dropped) of the
// minimal non-zero solutions of z.x - s = 0, lex-sorted.
VecSet generators_of_A(const IntVec& z);

// The cone order: x <= y iff y - x is entry-wise non-negative and
// z.(y - x) >= 0, i.e. y - x lies in A(z).
bool leq_A(const NatVec& x, const NatVec& y, const IntVec& z);

struct CDDecomposition {
    VecSet d_set;      // generators of A(b-a), points of N^p
    VecSet c_set;      // minimal feasible points under leq_A, points of N^p
    VecSet discarded;  // minimal solutions with last coordinate >= 2, kept
                       // for audit as full (p+2)-vectors

    bool operator==(const CDDecomposition&) const = default;
};

// Enumerates the minimal non-zero solutions of
//
//     (b1-a1)x1 + ... + (bp-ap)xp - x_{p+1} - (alpha+beta) x_{p+2} = 0
//
// and splits them on the last coordinate: 0 -> d_set (projected), 1 -> the
// candidates whose leq_A-minimal members form c_set, >= 2 -> discarded.
// Requires alpha + beta >= 1; throws degenerate_offsets otherwise.
CDDecomposition cd_decomposition(const ProblemInstance& instance);

}  // namespace diomon
