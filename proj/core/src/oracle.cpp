#include "diomon/oracle.hpp"

#include <algorithm>

namespace diomon {

namespace {

struct Search {
    const ProblemInstance& inst;
    Int n = 0;
    Int need_b = 0;              // n + beta, the value b.x must reach
    std::vector<Int> caps;       // per-coordinate search bounds
    std::vector<Int> suffix_b;   // suffix_b[i] = sum_{j >= i} b_j * caps_j
    NatVec point;

    // Lexicographically first witness below `caps`, if any. The two prunes:
    //   a-side: a.x only grows along a branch, so partial_a + alpha > n kills it.
    //   b-side: b.x can reach at most partial_b + suffix_b[i], so falling
    //           short of need_b kills it.
    bool walk(std::size_t i, Int partial_a, Int partial_b) {
        if (partial_a + inst.alpha > n) return false;
        if (partial_b + suffix_b[i] < need_b) return false;
        if (i + 1 == caps.size()) {
            // Last coordinate in closed form: the two inequalities pin x_i to
            //   x_i >= ceil((need_b - partial_b) / b_i)      (b-side)
            //   x_i <= floor((n - alpha - partial_a) / a_i)  (a-side)
            // with the cap standing in whenever a coefficient is 0.
            Int lo = 0;
            if (inst.b[i] == 0) {
                if (partial_b < need_b) return false;
            } else if (partial_b < need_b) {
                Int deficit = need_b - partial_b;
                lo = (deficit + inst.b[i] - 1) / inst.b[i];
            }
            Int hi = inst.a[i] == 0 ? caps[i] : (n - inst.alpha - partial_a) / inst.a[i];
            if (lo > hi) return false;
            point[i] = lo;
            return true;
        }
        for (Int v = 0; v <= caps[i]; ++v) {
            Int pa = partial_a + inst.a[i] * v;
            if (pa + inst.alpha > n) break;  // a_i >= 0: larger v only worsens it
            point[i] = v;
            if (walk(i + 1, pa, partial_b + inst.b[i] * v)) return true;
        }
        point[i] = 0;
        return false;
    }
};

}  // namespace

std::optional<NatVec> feasible(Int n, const ProblemInstance& instance) {
    validate(instance);
    if (n < 0) return std::nullopt;

    Search s{instance, 0, 0, {}, {}, {}};
    s.n = n;
    s.need_b = checked_add(n, instance.beta);
    s.caps.resize(instance.dim());
    for (std::size_t i = 0; i < instance.dim(); ++i)
        s.caps[i] = instance.a[i] >= 1 ? n : (instance.b[i] >= 1 ? s.need_b : 0);

    // Checked suffix sums bound every partial product and sum in the walk,
    // so the inner loops can use plain arithmetic.
    s.suffix_b.assign(instance.dim() + 1, 0);
    Int a_reach = 0;
    for (std::size_t i = instance.dim(); i-- > 0;) {
        s.suffix_b[i] =
            checked_add(s.suffix_b[i + 1], checked_mul(instance.b[i], s.caps[i]));
        a_reach = checked_add(a_reach, checked_mul(instance.a[i], s.caps[i]));
    }
    checked_add(a_reach, instance.alpha);

    s.point.assign(instance.dim(), 0);
    if (s.walk(0, 0, 0)) return s.point;
    return std::nullopt;
}

std::vector<Int> brute_force_set(const ProblemInstance& instance, Int bound) {
    validate(instance);
    std::vector<Int> members;
    for (Int n = 0; n <= bound; ++n)
        if (feasible(n, instance)) members.push_back(n);
    return members;
}

OracleReport agree(const SolveReport& report, Int bound) {
    OracleReport out;
    out.bound = bound;
    for (Int n = 0; n <= bound; ++n) {
        bool feas = feasible(n, report.instance).has_value();
        if (feas) out.members.push_back(n);
        bool oracle_says = feas || n == 0;  // both sides compare with 0 adjoined
        bool solver_says = report.monoid.contains(n);
        if (solver_says != oracle_says) out.disagreements.push_back({n, solver_says, oracle_says});
    }
    return out;
}

}  // namespace diomon
