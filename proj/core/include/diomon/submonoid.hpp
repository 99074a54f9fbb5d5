#pragma once

// Finite arithmetic on submonoids of (N,+): membership, the unique minimal
// generating set, gcd normalization, Frobenius number / conductor / gaps,
// and the closure that produces the smallest monoid containing a seed set
// and stable under adding step values to non-zero members.

#include <optional>
#include <vector>

#include "diomon/ints.hpp"

namespace diomon {

// A finite set of positive integers: zeros dropped, duplicates removed,
// sorted ascending. Negative input values are rejected.
class GeneratorSet {
public:
    GeneratorSet() = default;
    explicit GeneratorSet(std::vector<Int> values);

    const std::vector<Int>& values() const { return values_; }
    bool empty() const { return values_.empty(); }
    std::size_t size() const { return values_.size(); }
    Int min() const { return values_.front(); }
    Int max() const { return values_.back(); }

    bool operator==(const GeneratorSet&) const = default;

private:
    std::vector<Int> values_;  // strictly increasing, all >= 1
};

// n is a finite sum of generators (0 is the empty sum).
bool membership(Int n, const GeneratorSet& gens);

// The unique minimal generating set of <gens>: the generators that are not a
// sum of two non-zero members.
std::vector<Int> minimal_generators(const GeneratorSet& gens);

// (gcd(gens), gens/gcd). Throws empty_generator_set on an empty input.
std::pair<Int, GeneratorSet> gcd_normalize(const GeneratorSet& gens);

struct FrobeniusData {
    std::optional<Int> frobenius;  // largest non-member, absent when <gens> = N
    Int conductor = 0;             // frobenius + 1, or 0 when absent
    std::vector<Int> gaps;         // sorted non-members below the conductor

    bool operator==(const FrobeniusData&) const = default;
};

// Requires gcd(gens) = 1 and gens non-empty (throws not_numerical /
// empty_generator_set). Walks membership upward until min(gens) consecutive
// members appear: once a full window of that width is covered, repeatedly
// adding min(gens) covers every larger integer, so the window start is the
// conductor exactly.
FrobeniusData frobenius_and_gaps(const GeneratorSet& gens);

struct MonoidDescriptor {
    Int d = 0;                       // gcd of the non-zero elements; 0 for {0}
    std::vector<Int> min_generators; // minimal generating set, sorted
    std::optional<Int> frobenius;    // of the normalized (divided-by-d) monoid
    Int conductor = 0;               // of the normalized monoid
    std::vector<Int> gaps;           // of the normalized monoid
    bool is_numerical = false;       // d == 1 and min_generators non-empty

    static MonoidDescriptor trivial();

    bool contains(Int n) const;

    bool operator==(const MonoidDescriptor&) const = default;
};

// Full descriptor of <gens>.
MonoidDescriptor describe(const GeneratorSet& gens);

struct ClosureTrace {
    // Minimal generating set after each round, starting with the seed's.
    std::vector<std::vector<Int>> msg_per_round;
};

// Smallest submonoid M of (N,+) with seed ⊆ M and (M \ {0}) + steps ⊆ M.
// Fixed-point iteration X <- minimal_generators(<X ∪ (X + steps)>); each
// round either grows the monoid or halts, and at a fixed gcd the normalized
// gap set strictly shrinks, so the loop terminates. The iteration cap is a
// diagnostic only and throws iteration_cap_exceeded if a bug prevents
// convergence. An empty seed yields the trivial monoid {0}.
MonoidDescriptor smallest_b_monoid(const GeneratorSet& seed, const GeneratorSet& steps,
                                   ClosureTrace* trace = nullptr);

// All members <= up_to, sorted ascending (0 always included).
std::vector<Int> enumerate_elements(const MonoidDescriptor& desc, Int up_to);

}  // namespace diomon
