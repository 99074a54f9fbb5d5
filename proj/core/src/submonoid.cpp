#include "diomon/submonoid.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace diomon {

namespace {

// Upper bound on membership tables; beyond this the computation is refused
// loudly instead of exhausting memory.
constexpr Int kMaxTableSize = 200'000'000;

// reach[i] == 1 iff i is a sum of generators, for 0 <= i <= limit.
std::vector<char> reachable_table(Int limit, const GeneratorSet& gens) {
    if (limit >= kMaxTableSize)
        fail(Errc::safety_cap_exceeded,
             "membership table of size " + std::to_string(limit) + " refused");
    std::vector<char> reach(static_cast<std::size_t>(limit) + 1, 0);
    reach[0] = 1;
    for (Int g : gens.values()) {
        if (g > limit) break;
        for (Int i = g; i <= limit; ++i)
            if (reach[i - g]) reach[i] = 1;
    }
    return reach;
}

}  // namespace

GeneratorSet::GeneratorSet(std::vector<Int> values) {
    for (Int v : values)
        if (v < 0) fail(Errc::negative_entry, "generators must be non-negative");
    std::erase(values, 0);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    values_ = std::move(values);
}

bool membership(Int n, const GeneratorSet& gens) {
    if (n < 0) return false;
    if (n == 0) return true;
    if (gens.empty() || n < gens.min()) return false;
    return reachable_table(n, gens)[static_cast<std::size_t>(n)] != 0;
}

std::vector<Int> minimal_generators(const GeneratorSet& gens) {
    if (gens.empty()) return {};
    std::vector<char> reach = reachable_table(gens.max(), gens);
    std::vector<Int> out;
    for (Int g : gens.values()) {
        bool is_sum = false;
        for (Int u = 1; u <= g / 2 && !is_sum; ++u)
            if (reach[u] && reach[g - u]) is_sum = true;
        if (!is_sum) out.push_back(g);
    }
    return out;
}

std::pair<Int, GeneratorSet> gcd_normalize(const GeneratorSet& gens) {
    if (gens.empty()) fail(Errc::empty_generator_set, "cannot normalize the empty set");
    Int d = gcd_of(gens.values());
    std::vector<Int> scaled;
    scaled.reserve(gens.size());
    for (Int g : gens.values()) scaled.push_back(g / d);
    return {d, GeneratorSet(std::move(scaled))};
}

FrobeniusData frobenius_and_gaps(const GeneratorSet& gens) {
    if (gens.empty()) fail(Errc::empty_generator_set, "no generators");
    if (gcd_of(gens.values()) != 1)
        fail(Errc::not_numerical, "gcd " + std::to_string(gcd_of(gens.values())) + " != 1");

    FrobeniusData out;
    if (gens.min() == 1) return out;  // <1> = N: no gaps, conductor 0

    const Int window = gens.min();
    // Frobenius(gens) < min*max for coprime generators, so a window of
    // `window` consecutive members always starts at or below min*max + min.
    const Int cap = checked_add(checked_mul(gens.min(), gens.max()), gens.min());

    Int limit = std::min(cap, checked_add(checked_mul(gens.max(), 2), window));
    for (;;) {
        std::vector<char> reach = reachable_table(limit, gens);
        Int run = 0;
        for (Int i = 0; i <= limit; ++i) {
            run = reach[i] ? run + 1 : 0;
            if (run == window) {
                Int conductor = i - window + 1;
                out.conductor = conductor;
                out.frobenius = conductor - 1;
                for (Int v = 1; v < conductor; ++v)
                    if (!reach[v]) out.gaps.push_back(v);
                return out;
            }
        }
        if (limit >= cap)
            fail(Errc::safety_cap_exceeded,
                 "no conductor below min*max + min; input cannot have gcd 1");
        limit = std::min(cap, checked_mul(limit, 2));
    }
}

MonoidDescriptor MonoidDescriptor::trivial() { return {}; }

bool MonoidDescriptor::contains(Int n) const {
    if (n < 0) return false;
    if (n == 0) return true;
    if (d == 0 || n % d != 0) return false;
    Int m = n / d;
    if (m >= conductor) return true;
    return !std::binary_search(gaps.begin(), gaps.end(), m);
}

MonoidDescriptor describe(const GeneratorSet& gens) {
    if (gens.empty()) return MonoidDescriptor::trivial();
    MonoidDescriptor desc;
    desc.min_generators = minimal_generators(gens);
    auto [d, normalized] = gcd_normalize(GeneratorSet(desc.min_generators));
    desc.d = d;
    FrobeniusData fd = frobenius_and_gaps(normalized);
    desc.frobenius = fd.frobenius;
    desc.conductor = fd.conductor;
    desc.gaps = std::move(fd.gaps);
    desc.is_numerical = (d == 1);
    return desc;
}

MonoidDescriptor smallest_b_monoid(const GeneratorSet& seed, const GeneratorSet& steps,
                                   ClosureTrace* trace) {
    if (trace) trace->msg_per_round.clear();
    if (seed.empty()) return MonoidDescriptor::trivial();

    std::vector<Int> current = minimal_generators(seed);
    if (trace) trace->msg_per_round.push_back(current);

    // Diagnostic cap only; each round strictly enlarges the monoid, the gcd
    // can drop finitely often, and at fixed gcd the normalized gap count
    // strictly shrinks, so the loop provably halts long before this.
    MonoidDescriptor initial = describe(GeneratorSet(current));
    Int max_step = steps.empty() ? 0 : steps.max();
    Int cap = checked_mul(10, checked_add(checked_add(checked_mul(std::max<Int>(initial.d, 1),
                                                                  initial.conductor),
                                                      max_step),
                                          1));

    for (Int round = 0; !steps.empty(); ++round) {
        if (round > cap) fail(Errc::iteration_cap_exceeded, "closure failed to stabilize");
        std::vector<Int> enlarged = current;
        for (Int g : current)
            for (Int s : steps.values()) enlarged.push_back(checked_add(g, s));
        std::vector<Int> next = minimal_generators(GeneratorSet(std::move(enlarged)));
        if (next == current) break;
        current = std::move(next);
        if (trace) trace->msg_per_round.push_back(current);
    }
    return describe(GeneratorSet(current));
}

std::vector<Int> enumerate_elements(const MonoidDescriptor& desc, Int up_to) {
    std::vector<Int> out;
    if (up_to < 0) return out;
    out.push_back(0);
    if (desc.d == 0) return out;
    if (up_to / desc.d >= kMaxTableSize)
        fail(Errc::safety_cap_exceeded, "enumeration range too large");
    for (Int n = desc.d; n <= up_to; n += desc.d)
        if (desc.contains(n)) out.push_back(n);
    return out;
}

}  // namespace diomon
