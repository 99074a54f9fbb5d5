#include "diomon/solver.hpp"

#include <algorithm>
#include <string>

#include "diomon/oracle.hpp"

namespace diomon {

namespace {

// Materialization cap for interval unions; larger inputs are refused loudly.
constexpr Int kMaxUnionSize = 8'000'000;

std::vector<Int> union_values(const std::vector<Interval>& intervals) {
    Int total = 0;
    for (const Interval& iv : intervals)
        total = checked_add(total, checked_add(checked_sub(iv.hi, iv.lo), 1));
    if (total > kMaxUnionSize)
        fail(Errc::safety_cap_exceeded, "interval union of " + std::to_string(total) + " values refused");
    std::vector<Int> out;
    out.reserve(static_cast<std::size_t>(total));
    for (const Interval& iv : intervals)
        for (Int v = iv.lo; v <= iv.hi; ++v) out.push_back(v);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Interval> sorted_intervals(std::vector<Interval> intervals) {
    std::sort(intervals.begin(), intervals.end(),
              [](const Interval& x, const Interval& y) {
                  return x.lo != y.lo ? x.lo < y.lo : x.hi < y.hi;
              });
    intervals.erase(std::unique(intervals.begin(), intervals.end()), intervals.end());
    return intervals;
}

void attach_classification(SolveReport& report) {
    Classification cls = classify(report.instance);
    report.case_tag = cls.tag;
    report.witness_index = cls.witness_index;
}

}  // namespace

const char* to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::empty_or_trivial: return "empty_or_trivial";
        case CaseTag::diagonal_submonoid: return "diagonal_submonoid";
        case CaseTag::numerical_semigroup: return "numerical_semigroup";
    }
    return "unknown";
}

Classification classify(const ProblemInstance& instance) {
    validate(instance);
    Classification cls;
    for (std::size_t j = 0; j < instance.dim(); ++j) {
        if (instance.a[j] < instance.b[j]) {
            cls.tag = CaseTag::numerical_semigroup;
            cls.witness_index = j;
            return cls;
        }
    }
    // All a_i >= b_i from here on.
    if (instance.alpha == 0 && instance.beta == 0) {
        for (std::size_t i = 0; i < instance.dim(); ++i)
            if (instance.a[i] == instance.b[i]) cls.equal_indices.push_back(i);
        if (!cls.equal_indices.empty()) {
            cls.tag = CaseTag::diagonal_submonoid;
            return cls;
        }
    }
    cls.tag = CaseTag::empty_or_trivial;
    return cls;
}

std::optional<Interval> interval_of(const NatVec& m, const ProblemInstance& instance,
                                    bool with_offsets) {
    if (m.size() != instance.dim())
        fail(Errc::dimension_mismatch, "point length does not match instance dimension");
    Int lo = checked_dot(instance.a, m);
    Int hi = checked_dot(instance.b, m);
    if (with_offsets) {
        lo = checked_add(lo, instance.alpha);
        hi = checked_sub(hi, instance.beta);
    }
    if (lo > hi) return std::nullopt;
    return Interval{lo, hi};
}

SolveReport solve_zero_case(const ProblemInstance& instance) {
    validate(instance);
    if (instance.alpha != 0 || instance.beta != 0)
        fail(Errc::invalid_input, "zero-offset solver requires alpha = beta = 0");

    SolveReport report;
    report.instance = instance;
    report.a_generators = generators_of_A(instance.upper_minus_lower());

    std::vector<Interval> intervals;
    for (const NatVec& m : report.a_generators) {
        auto iv = interval_of(m, instance, false);
        if (!iv)
            fail(Errc::internal_inconsistency, "cone generator produced an empty interval");
        intervals.push_back(*iv);
    }
    report.d_intervals = sorted_intervals(std::move(intervals));
    report.d_values = union_values(report.d_intervals);
    // x = 0 always satisfies 0 <= n <= 0 at zero offsets.
    report.zero_in_s = true;
    report.monoid = describe(GeneratorSet(report.d_values));
    attach_classification(report);
    return report;
}

SolveReport solve_from_decomposition(const ProblemInstance& instance, CDDecomposition cd) {
    validate(instance);

    SolveReport report;
    report.instance = instance;

    std::vector<Interval> c_ivs, d_ivs;
    for (const NatVec& c : cd.c_set)
        if (auto iv = interval_of(c, instance, true)) c_ivs.push_back(*iv);
    for (const NatVec& d : cd.d_set)
        if (auto iv = interval_of(d, instance, false)) d_ivs.push_back(*iv);
    report.c_intervals = sorted_intervals(std::move(c_ivs));
    report.d_intervals = sorted_intervals(std::move(d_ivs));
    report.c_values = union_values(report.c_intervals);
    report.d_values = union_values(report.d_intervals);
    report.cd = std::move(cd);

    report.zero_in_s =
        std::binary_search(report.c_values.begin(), report.c_values.end(), Int{0});

    // Closure seed: the non-zero C values. When 0 in C, the step rule cannot
    // act on the identity, but appending one cone generator to a witness of 0
    // shows every D value is itself attainable, so D joins the seed.
    std::vector<Int> seed = report.c_values;
    if (report.zero_in_s)
        seed.insert(seed.end(), report.d_values.begin(), report.d_values.end());

    report.monoid = smallest_b_monoid(GeneratorSet(std::move(seed)), GeneratorSet(report.d_values));
    attach_classification(report);
    return report;
}

SolveReport solve_general(const ProblemInstance& instance) {
    return solve_from_decomposition(instance, cd_decomposition(instance));
}

SolveReport solve(const ProblemInstance& instance) {
    validate(instance);
    SolveReport report = (instance.alpha == 0 && instance.beta == 0)
                             ? solve_zero_case(instance)
                             : solve_general(instance);

    // The section-4 classification predicts the shape of the result; a
    // mismatch means a bug somewhere in the pipeline.
    Classification cls = classify(instance);
    switch (cls.tag) {
        case CaseTag::empty_or_trivial:
            if (report.monoid != MonoidDescriptor::trivial())
                fail(Errc::internal_inconsistency, "expected the trivial monoid");
            break;
        case CaseTag::diagonal_submonoid: {
            std::vector<Int> diag;
            for (std::size_t i : cls.equal_indices) diag.push_back(instance.a[i]);
            if (report.monoid != describe(GeneratorSet(std::move(diag))))
                fail(Errc::internal_inconsistency,
                     "diagonal case does not match the predicted monoid");
            break;
        }
        case CaseTag::numerical_semigroup:
            if (!report.monoid.is_numerical)
                fail(Errc::internal_inconsistency, "expected a numerical semigroup");
            break;
    }
    return report;
}

MembershipAnswer membership_with_witness(Int n, const SolveReport& report) {
    if (n < 0) fail(Errc::invalid_input, "membership query for a negative value");
    MembershipAnswer answer;
    if (n == 0) {
        answer.member = true;
        if (report.zero_in_s) {
            answer.witness = feasible(0, report.instance);
            if (!answer.witness)
                fail(Errc::witness_search_failure, "zero_in_s set but n = 0 has no witness");
        } else {
            answer.adjoined_zero = true;
        }
        return answer;
    }
    if (!report.monoid.contains(n)) return answer;
    answer.member = true;
    answer.witness = feasible(n, report.instance);
    if (!answer.witness)
        fail(Errc::witness_search_failure,
             "descriptor reports " + std::to_string(n) + " as a member but no witness exists");
    return answer;
}

}  // namespace diomon
