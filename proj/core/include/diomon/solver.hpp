#pragma once

// End-to-end pipeline producing a finite description of
// S(a,b,alpha,beta) ∪ {0}: the interval construction over cone generators
// for zero offsets, the minimal-points-plus-cone construction otherwise,
// and the classification of the result.

#include <cstddef>
#include <optional>
#include <vector>

#include "diomon/diophantine.hpp"
#include "diomon/instance.hpp"
#include "diomon/submonoid.hpp"

namespace diomon {

struct Interval {
    Int lo = 0;
    Int hi = 0;  // inclusive; lo <= hi

    bool operator==(const Interval&) const = default;
};

enum class CaseTag {
    empty_or_trivial,     // all a_i >= b_i, and strict everywhere or offsets non-zero
    diagonal_submonoid,   // all a_i >= b_i with some equality, zero offsets
    numerical_semigroup,  // some a_j < b_j
};

const char* to_string(CaseTag tag);

struct Classification {
    CaseTag tag = CaseTag::empty_or_trivial;
    std::optional<std::size_t> witness_index;  // 0-based j with a_j < b_j
    std::vector<std::size_t> equal_indices;    // 0-based E = { i : a_i = b_i }

    bool operator==(const Classification&) const = default;
};

Classification classify(const ProblemInstance& instance);

// [a.m + alpha, b.m - beta] (offsets only when with_offsets), or absent when
// the range is empty.
std::optional<Interval> interval_of(const NatVec& m, const ProblemInstance& instance,
                                    bool with_offsets);

struct SolveReport {
    ProblemInstance instance;
    CaseTag case_tag = CaseTag::empty_or_trivial;
    std::optional<std::size_t> witness_index;
    bool zero_in_s = false;            // n = 0 itself satisfies the inequalities
    std::optional<CDDecomposition> cd; // general case only
    VecSet a_generators;               // zero-offset case: generators of A(b-a)
    std::vector<Interval> c_intervals; // with-offset intervals over c_set
    std::vector<Interval> d_intervals; // offset-free intervals over d_set / generators
    std::vector<Int> c_values;         // sorted union of c_intervals
    std::vector<Int> d_values;         // sorted union of d_intervals
    MonoidDescriptor monoid;           // S(a,b,alpha,beta) ∪ {0}
};

// alpha = beta = 0: the monoid generated by the union of [a.m, b.m] over the
// generators m of A(b-a).
SolveReport solve_zero_case(const ProblemInstance& instance);

// The interval-and-closure pipeline on an already-computed decomposition.
// Seeds the closure with the non-zero C values; when 0 lies in C the closure
// condition alone cannot bootstrap from the identity, yet every D value is
// then itself attainable (append one cone generator to the witness of 0), so
// the non-zero D values join the seed.
SolveReport solve_from_decomposition(const ProblemInstance& instance, CDDecomposition cd);

// (alpha,beta) != (0,0): cd_decomposition + solve_from_decomposition.
SolveReport solve_general(const ProblemInstance& instance);

// Validates, dispatches on the offsets, attaches the classification and
// cross-checks it against the computed monoid (throws internal_inconsistency
// on mismatch, which indicates a bug).
SolveReport solve(const ProblemInstance& instance);

struct MembershipAnswer {
    bool member = false;
    bool adjoined_zero = false;         // n = 0 and 0 does not satisfy the inequalities
    std::optional<NatVec> witness;      // x with a.x+alpha <= n <= b.x-beta

    bool operator==(const MembershipAnswer&) const = default;
};

// Answers from the descriptor; for a positive member a witness is recovered
// by bounded search and its absence throws witness_search_failure.
MembershipAnswer membership_with_witness(Int n, const SolveReport& report);

}  // namespace diomon
