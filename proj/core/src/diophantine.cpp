#include "diomon/diophantine.hpp"

#include <algorithm>
#include <string>

namespace diomon {

namespace {

// x dominates y entry-wise (and the vectors are distinct somewhere else).
bool dominates(const NatVec& x, const NatVec& y) {
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] < y[i]) return false;
    return true;
}

// Keeps exactly the componentwise-minimal vectors, lex-sorted.
VecSet minimal_filter(VecSet vecs) {
    std::sort(vecs.begin(), vecs.end());
    vecs.erase(std::unique(vecs.begin(), vecs.end()), vecs.end());
    VecSet out;
    for (std::size_t i = 0; i < vecs.size(); ++i) {
        bool minimal = true;
        for (std::size_t j = 0; j < vecs.size() && minimal; ++j)
            if (j != i && dominates(vecs[i], vecs[j])) minimal = false;
        if (minimal) out.push_back(vecs[i]);
    }
    return out;
}

struct Enumerator {
    const IntVec& coeffs;
    Int max_abs;   // max |coeffs_i|
    Int budget;    // cap on the coordinate sum
    NatVec point;
    VecSet found;

    // Depth-first over coordinates. A partial dot s with |s| > max_abs * r
    // cannot return to zero using r more units of coordinate sum, so the
    // branch is cut; once the violation has the sign the current coefficient
    // pushes toward, larger values only worsen it and the loop stops.
    void walk(std::size_t i, Int remaining, Int partial) {
        if (i + 1 == coeffs.size()) {
            for (Int v = 0; v <= remaining; ++v) {
                Int s = partial + coeffs[i] * v;
                point[i] = v;
                if (s == 0 && std::any_of(point.begin(), point.end(), [](Int e) { return e != 0; }))
                    found.push_back(point);
            }
            point[i] = 0;
            return;
        }
        for (Int v = 0; v <= remaining; ++v) {
            Int s = partial + coeffs[i] * v;
            Int slack = max_abs * (remaining - v);
            if (s > slack) {
                if (coeffs[i] >= 0) break;
                continue;
            }
            if (-s > slack) {
                if (coeffs[i] <= 0) break;
                continue;
            }
            point[i] = v;
            walk(i + 1, remaining - v, s);
        }
        point[i] = 0;
    }
};

}  // namespace

Int pottier_budget(const IntVec& coeffs) {
    if (coeffs.empty()) fail(Errc::empty_dimension, "coefficient vector is empty");
    Int sum = 0;
    for (Int c : coeffs) sum = checked_add(sum, checked_abs(c));
    return checked_add(sum, 1);
}

VecSet minimal_nonzero_solutions(const IntVec& coeffs, Int budget) {
    if (coeffs.empty()) fail(Errc::empty_dimension, "coefficient vector is empty");
    if (budget < 0) fail(Errc::invalid_input, "budget must be non-negative");
    Int max_abs = 0;
    for (Int c : coeffs) max_abs = std::max(max_abs, checked_abs(c));
    // Partial dots stay within +-2*max_abs*budget; verify that range up
    // front so the inner loops can use plain arithmetic.
    checked_mul(checked_mul(max_abs, budget), 2);

    Enumerator e{coeffs, max_abs, budget, NatVec(coeffs.size(), 0), {}};
    e.walk(0, budget, 0);
    return minimal_filter(std::move(e.found));
}

VecSet minimal_homogeneous_solutions(const IntVec& coeffs) {
    return minimal_nonzero_solutions(coeffs, pottier_budget(coeffs));
}

VecSet generators_of_A(const IntVec& z) {
    IntVec coeffs = z;
    coeffs.push_back(-1);  // z.x - s = 0 linearizes z.x >= 0 with slack s
    VecSet mins = minimal_homogeneous_solutions(coeffs);
    VecSet gens;
    gens.reserve(mins.size());
    for (const NatVec& m : mins) gens.emplace_back(m.begin(), m.end() - 1);
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return gens;
}

bool leq_A(const NatVec& x, const NatVec& y, const IntVec& z) {
    if (x.size() != y.size() || x.size() != z.size())
        fail(Errc::dimension_mismatch, "leq_A arguments differ in length");
    for (std::size_t i = 0; i < x.size(); ++i)
        if (y[i] < x[i]) return false;
    return checked_dot(z, vec_sub(y, x)) >= 0;
}

CDDecomposition cd_decomposition(const ProblemInstance& instance) {
    validate(instance);
    Int offset_sum = checked_add(instance.alpha, instance.beta);
    if (offset_sum == 0)
        fail(Errc::degenerate_offsets, "alpha + beta must be >= 1; use the zero-offset solver");

    IntVec diff = instance.upper_minus_lower();
    IntVec coeffs = diff;
    coeffs.push_back(-1);
    coeffs.push_back(-offset_sum);

    CDDecomposition out;
    VecSet candidates;
    for (const NatVec& m : minimal_homogeneous_solutions(coeffs)) {
        Int last = m.back();
        NatVec projected(m.begin(), m.end() - 2);
        if (last == 0)
            out.d_set.push_back(std::move(projected));
        else if (last == 1)
            candidates.push_back(std::move(projected));
        else
            out.discarded.push_back(m);
    }

    // Minimal candidates under the cone order; distinct projections only,
    // since the dropped slack coordinate is determined by the first p.
    for (const NatVec& c : candidates) {
        bool minimal = true;
        for (const NatVec& other : candidates) {
            if (&other == &c) continue;
            if (leq_A(other, c, diff)) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.c_set.push_back(c);
    }
    std::sort(out.c_set.begin(), out.c_set.end());
    return out;
}

}  // namespace diomon
