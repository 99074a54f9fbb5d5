#pragma once

// Test-only reference implementations. Each one takes the dumbest correct
// path available so it shares no code with the library routines it checks.

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "diomon/diophantine.hpp"
#include "diomon/instance.hpp"

namespace diomon::testing {

// Every x in [0..budget]^q with coordinate sum <= budget, coeffs.x == 0 and
// x != 0, by plain odometer enumeration.
inline VecSet naive_bounded_solutions(const IntVec& coeffs, Int budget) {
    VecSet out;
    NatVec x(coeffs.size(), 0);
    for (;;) {
        Int sum = 0, dot = 0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            sum += x[i];
            dot += coeffs[i] * x[i];
        }
        if (sum > 0 && sum <= budget && dot == 0) out.push_back(x);
        std::size_t i = x.size();
        while (i > 0) {
            --i;
            if (x[i] < budget) {
                ++x[i];
                std::fill(x.begin() + static_cast<std::ptrdiff_t>(i) + 1, x.end(), 0);
                break;
            }
            if (i == 0) return out;
        }
    }
}

inline bool dominates(const NatVec& x, const NatVec& y) {
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] < y[i]) return false;
    return true;
}

// Componentwise-minimal members of a set of distinct vectors.
inline VecSet naive_minimal(VecSet vecs) {
    std::sort(vecs.begin(), vecs.end());
    vecs.erase(std::unique(vecs.begin(), vecs.end()), vecs.end());
    VecSet out;
    for (const NatVec& v : vecs) {
        bool minimal = true;
        for (const NatVec& other : vecs)
            if (other != v && dominates(v, other)) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(v);
    }
    return out;
}

inline VecSet naive_minimal_solutions(const IntVec& coeffs, Int budget) {
    return naive_minimal(naive_bounded_solutions(coeffs, budget));
}

// Members of <gens> up to `limit` by set-based fixpoint iteration.
inline std::set<Int> naive_monoid_members(const std::vector<Int>& gens, Int limit) {
    std::set<Int> members{0};
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<Int> snapshot(members.begin(), members.end());
        for (Int m : snapshot)
            for (Int g : gens) {
                Int s = m + g;
                if (s <= limit && members.insert(s).second) changed = true;
            }
    }
    return members;
}

// Minimal generating set by definition: members that are not a sum of two
// non-zero members. `members` must cover [0, limit] of the monoid and every
// candidate generator must be <= limit.
inline std::vector<Int> naive_msg(const std::set<Int>& members, Int limit) {
    std::vector<Int> out;
    for (Int m : members) {
        if (m == 0 || m > limit) continue;
        bool is_sum = false;
        for (Int u = 1; u < m && !is_sum; ++u)
            if (members.count(u) && members.count(m - u)) is_sum = true;
        if (!is_sum) out.push_back(m);
    }
    return out;
}

// The word problem checked directly on its own terms:
//   price*n >= costs.x + profit   and   n + spare <= capacities.x.
// Every cost is a positive multiple of price, so cost_i*x_i <= price*n
// forces x_i <= n and the box [0,n]^p is exhaustive.
inline bool transport_profitable(const TransportSpec& spec, Int n) {
    std::size_t p = spec.dim();
    NatVec x(p, 0);
    for (;;) {
        Int cost = 0, cap = 0;
        for (std::size_t i = 0; i < p; ++i) {
            cost += spec.costs[i] * x[i];
            cap += spec.capacities[i] * x[i];
        }
        if (spec.price * n >= cost + spec.profit && n + spec.spare <= cap) return true;
        std::size_t i = p;
        while (i > 0) {
            --i;
            if (x[i] < n) {
                ++x[i];
                std::fill(x.begin() + static_cast<std::ptrdiff_t>(i) + 1, x.end(), 0);
                break;
            }
            if (i == 0) return false;
        }
    }
}

inline ProblemInstance random_instance(std::mt19937& rng, int max_dim, Int max_coeff,
                                       Int max_offset) {
    std::uniform_int_distribution<int> dp(1, max_dim);
    std::uniform_int_distribution<Int> dc(0, max_coeff), doff(0, max_offset);
    ProblemInstance inst;
    int p = dp(rng);
    for (int i = 0; i < p; ++i) {
        inst.a.push_back(dc(rng));
        inst.b.push_back(dc(rng));
    }
    inst.alpha = doff(rng);
    inst.beta = doff(rng);
    return inst;
}

}  // namespace diomon::testing
