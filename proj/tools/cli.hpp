#pragma once

// Command-line front end: flag and JSON-file input, human and JSON output.
// Kept as a library so the command surface is testable without a process
// boundary; main() is a thin wrapper.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "diomon/oracle.hpp"
#include "diomon/solver.hpp"

namespace diomon::cli {

// Comma-separated 64-bit integers ("4,5" or "-1,1,-1").
std::vector<Int> parse_int_list(const std::string& text);

ProblemInstance instance_from_json(const nlohmann::json& j);
TransportSpec transport_from_json(const nlohmann::json& j);

// Solve report with the fixed key set. Elements run up to `bound` when
// given; the default horizon is the conductor (scaled by the gcd, plus a
// little slack for non-numerical monoids so the listing is not empty).
nlohmann::json report_to_json(const SolveReport& report, std::optional<Int> bound = {});

void render_report_text(const SolveReport& report, std::optional<Int> bound, std::ostream& out);

// Dispatches one command line (program name excluded). Returns the exit
// status: 0 success, 1 invalid input, 2 verification disagreement.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace diomon::cli
