#pragma once

// Problem instances: the coefficient vectors a, b and offsets alpha, beta of
//
//     a1*x1 + ... + ap*xp + alpha <= n <= b1*x1 + ... + bp*xp - beta
//
// and the word-problem data (trucks, costs, price, profit, spare) that
// reduces to such an instance.

#include <cstddef>
#include <vector>

#include "diomon/ints.hpp"

namespace diomon {

struct ProblemInstance {
    std::vector<Int> a;  // lower coefficients, non-negative
    std::vector<Int> b;  // upper coefficients, non-negative
    Int alpha = 0;
    Int beta = 0;

    std::size_t dim() const { return a.size(); }

    // b - a, the coefficient vector of the feasibility cone.
    std::vector<Int> upper_minus_lower() const;

    bool operator==(const ProblemInstance&) const = default;
};

// Checks the ProblemInstance invariants and returns the instance unchanged.
// Throws: empty_dimension, dimension_mismatch, negative_entry.
const ProblemInstance& validate(const ProblemInstance& instance);

struct TransportSpec {
    std::vector<Int> capacities;  // cars per truck type, >= 1
    std::vector<Int> costs;       // currency per truck type, >= 1
    Int price = 0;                // currency per transported car, >= 1
    Int profit = 0;               // required minimum profit, >= 0
    Int spare = 0;                // extra unpaid cars loaded, >= 0

    std::size_t dim() const { return capacities.size(); }

    bool operator==(const TransportSpec&) const = default;
};

// A load of n cars is profitable, i.e.
//
//     price*n >= costs.x + profit   and   n + spare <= capacities.x,
//
// for some x in N^p iff n lies in S(a,b,alpha,beta) of the returned instance,
// where a_i = costs_i/price, b_i = capacities_i, alpha = profit/price and
// beta = spare. Requires price to divide every cost and the profit; throws
// indivisible_cost / indivisible_profit otherwise.
ProblemInstance reduce_transport(const TransportSpec& spec);

}  // namespace diomon
