#pragma once

#include <stdexcept>
#include <string>

namespace diomon {

enum class Errc {
    dimension_mismatch,
    empty_dimension,
    negative_entry,
    indivisible_cost,
    indivisible_profit,
    invalid_input,
    degenerate_offsets,
    empty_generator_set,
    not_numerical,
    safety_cap_exceeded,
    iteration_cap_exceeded,
    arithmetic_overflow,
    internal_inconsistency,
    witness_search_failure,
};

const char* to_string(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace diomon
