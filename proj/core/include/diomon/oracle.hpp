#pragma once

// Brute-force ground truth for S(a,b,alpha,beta): direct feasibility search
// over a finite box that provably contains a witness whenever one exists.
// This module anchors the test suite, so it stays as plain as possible.

#include <optional>
#include <vector>

#include "diomon/instance.hpp"
#include "diomon/solver.hpp"

namespace diomon {

// Searches for x in N^p with a.x + alpha <= n <= b.x - beta and returns the
// lexicographically smallest witness, or absent when none exists.
// Per-coordinate caps:
//   a_i >= 1:            x_i <= n, since a_i*x_i <= a.x <= n - alpha <= n.
//   a_i = 0, b_i >= 1:   x_i <= n + beta, since x_i = n + beta already gives
//                        b_i*x_i - beta >= n and growing x_i only raises b.x.
//   a_i = b_i = 0:       x_i = 0, since x_i contributes to neither side.
std::optional<NatVec> feasible(Int n, const ProblemInstance& instance);

// { n <= bound : feasible(n) }, sorted ascending (0 appears exactly when
// n = 0 itself is feasible).
std::vector<Int> brute_force_set(const ProblemInstance& instance, Int bound);

struct Disagreement {
    Int n = 0;
    bool solver_says = false;
    bool oracle_says = false;

    bool operator==(const Disagreement&) const = default;
};

struct OracleReport {
    Int bound = 0;
    std::vector<Int> members;  // brute-force members <= bound
    std::vector<Disagreement> disagreements;

    bool ok() const { return disagreements.empty(); }
};

// Compares descriptor membership against brute force (both sides with 0
// adjoined) for every n <= bound and records each disagreement.
OracleReport agree(const SolveReport& report, Int bound);

}  // namespace diomon
