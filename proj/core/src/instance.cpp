#include "diomon/instance.hpp"

#include <string>

namespace diomon {

std::vector<Int> ProblemInstance::upper_minus_lower() const { return vec_sub(b, a); }

const ProblemInstance& validate(const ProblemInstance& instance) {
    if (instance.a.empty() && instance.b.empty())
        fail(Errc::empty_dimension, "instance needs at least one coordinate");
    if (instance.a.size() != instance.b.size())
        fail(Errc::dimension_mismatch, "a has " + std::to_string(instance.a.size()) +
                                           " entries, b has " + std::to_string(instance.b.size()));
    for (Int v : instance.a)
        if (v < 0) fail(Errc::negative_entry, "lower coefficients must be non-negative");
    for (Int v : instance.b)
        if (v < 0) fail(Errc::negative_entry, "upper coefficients must be non-negative");
    if (instance.alpha < 0 || instance.beta < 0)
        fail(Errc::negative_entry, "offsets must be non-negative");
    return instance;
}

ProblemInstance reduce_transport(const TransportSpec& spec) {
    if (spec.capacities.empty() && spec.costs.empty())
        fail(Errc::empty_dimension, "transport spec needs at least one truck type");
    if (spec.capacities.size() != spec.costs.size())
        fail(Errc::dimension_mismatch, "capacities and costs differ in length");
    if (spec.price < 1) fail(Errc::invalid_input, "price must be positive");
    if (spec.profit < 0 || spec.spare < 0)
        fail(Errc::negative_entry, "profit and spare must be non-negative");
    for (Int c : spec.capacities)
        if (c < 1) fail(Errc::invalid_input, "capacities must be positive");

    ProblemInstance out;
    out.b = spec.capacities;
    out.a.reserve(spec.costs.size());
    for (Int cost : spec.costs) {
        if (cost < 1) fail(Errc::invalid_input, "costs must be positive");
        if (cost % spec.price != 0)
            fail(Errc::indivisible_cost,
                 "price " + std::to_string(spec.price) + " does not divide cost " + std::to_string(cost));
        out.a.push_back(cost / spec.price);
    }
    if (spec.profit % spec.price != 0)
        fail(Errc::indivisible_profit, "price " + std::to_string(spec.price) +
                                           " does not divide profit " + std::to_string(spec.profit));
    out.alpha = spec.profit / spec.price;
    out.beta = spec.spare;
    return validate(out);
}

}  // namespace diomon
