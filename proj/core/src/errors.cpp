#include "diomon/errors.hpp"

namespace diomon {

const char* to_string(Errc code) {
    switch (code) {
        case Errc::dimension_mismatch: return "dimension-mismatch";
        case Errc::empty_dimension: return "empty-dimension";
        case Errc::negative_entry: return "negative-entry";
        case Errc::indivisible_cost: return "indivisible-cost";
        case Errc::indivisible_profit: return "indivisible-profit";
        case Errc::invalid_input: return "invalid-input";
        case Errc::degenerate_offsets: return "degenerate-offsets";
        case Errc::empty_generator_set: return "empty-generator-set";
        case Errc::not_numerical: return "not-numerical";
        case Errc::safety_cap_exceeded: return "safety-cap-exceeded";
        case Errc::iteration_cap_exceeded: return "iteration-cap-exceeded";
        case Errc::arithmetic_overflow: return "arithmetic-overflow";
        case Errc::internal_inconsistency: return "internal-inconsistency";
        case Errc::witness_search_failure: return "witness-search-failure";
    }
    return "unknown-error";
}

}  // namespace diomon
