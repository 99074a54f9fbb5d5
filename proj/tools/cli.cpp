#include "cli.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

namespace diomon::cli {

using nlohmann::json;

namespace {

std::string fmt_values(const std::vector<Int>& values) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) os << ", ";
        os << values[i];
    }
    os << '}';
    return os.str();
}

std::string fmt_point(const NatVec& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    os << ')';
    return os.str();
}

std::string fmt_points(const VecSet& vs) {
    if (vs.empty()) return "{}";
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) os << ", ";
        os << fmt_point(vs[i]);
    }
    os << '}';
    return os.str();
}

std::string fmt_intervals(const std::vector<Interval>& ivs) {
    if (ivs.empty()) return "(none)";
    std::ostringstream os;
    for (std::size_t i = 0; i < ivs.size(); ++i) {
        if (i) os << ", ";
        os << '[' << ivs[i].lo << ',' << ivs[i].hi << ']';
    }
    return os.str();
}

Int default_horizon(const MonoidDescriptor& desc) {
    if (desc.d <= 1) return desc.conductor;
    // Not cofinite: show the first few scaled members past the normalized
    // conductor so the listing is never just {0}.
    return checked_mul(desc.d, checked_add(desc.conductor, 2));
}

// Members with the arrow convention: "{0, 5, 7, ->}" when everything past
// the conductor belongs, "{0, 5, 10, ...}" for infinite non-cofinite sets.
std::string fmt_monoid_listing(const MonoidDescriptor& desc, Int horizon) {
    std::vector<Int> elems = enumerate_elements(desc, horizon);
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (i) os << ", ";
        os << elems[i];
    }
    if (desc.is_numerical && horizon >= desc.conductor)
        os << ", ->";
    else if (desc.d >= 1)
        os << ", ...";
    os << '}';
    return os.str();
}

json intervals_to_json(const std::vector<Interval>& ivs) {
    json arr = json::array();
    for (const Interval& iv : ivs) arr.push_back({iv.lo, iv.hi});
    return arr;
}

json points_to_json(const VecSet& vs) {
    json arr = json::array();
    for (const NatVec& v : vs) arr.push_back(v);
    return arr;
}

Int json_int(const json& j, const char* key, Int fallback, bool required) {
    if (!j.contains(key)) {
        if (required) fail(Errc::invalid_input, std::string("missing key \"") + key + '"');
        return fallback;
    }
    if (!j.at(key).is_number_integer())
        fail(Errc::invalid_input, std::string("key \"") + key + "\" must be an integer");
    return j.at(key).get<Int>();
}

std::vector<Int> json_int_array(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_array())
        fail(Errc::invalid_input, std::string("missing array \"") + key + '"');
    std::vector<Int> out;
    for (const json& v : j.at(key)) {
        if (!v.is_number_integer())
            fail(Errc::invalid_input, std::string("array \"") + key + "\" must hold integers");
        out.push_back(v.get<Int>());
    }
    return out;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::invalid_input, "cannot open " + path);
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded()) fail(Errc::invalid_input, "malformed JSON in " + path);
    return j;
}

struct InstanceArgs {
    std::string a_text, b_text, input_path;
    Int alpha = 0, beta = 0;

    void wire(CLI::App* cmd) {
        auto* oa = cmd->add_option("--a", a_text, "lower coefficients, comma separated");
        auto* ob = cmd->add_option("--b", b_text, "upper coefficients, comma separated");
        auto* oalpha = cmd->add_option("--alpha", alpha, "lower offset (default 0)");
        auto* obeta = cmd->add_option("--beta", beta, "upper offset (default 0)");
        auto* oin = cmd->add_option("--input", input_path, "instance JSON file");
        oin->excludes(oa)->excludes(ob)->excludes(oalpha)->excludes(obeta);
    }

    ProblemInstance load() const {
        if (!input_path.empty()) return instance_from_json(load_json_file(input_path));
        if (a_text.empty() || b_text.empty())
            fail(Errc::invalid_input, "provide --a and --b, or --input");
        ProblemInstance inst;
        inst.a = parse_int_list(a_text);
        inst.b = parse_int_list(b_text);
        inst.alpha = alpha;
        inst.beta = beta;
        return inst;
    }
};

void render_verification_text(const OracleReport& check, std::ostream& out) {
    if (check.ok()) {
        out << "oracle check up to " << check.bound << ": OK (" << check.members.size()
            << " members)\n";
        return;
    }
    out << "oracle check up to " << check.bound << ": " << check.disagreements.size()
        << " DISAGREEMENTS\n";
    for (const Disagreement& d : check.disagreements)
        out << "  n=" << d.n << " solver=" << (d.solver_says ? "member" : "non-member")
            << " oracle=" << (d.oracle_says ? "member" : "non-member") << '\n';
}

json verification_to_json(const OracleReport& check) {
    json arr = json::array();
    for (const Disagreement& d : check.disagreements)
        arr.push_back({{"n", d.n}, {"oracle", d.oracle_says}, {"solver", d.solver_says}});
    return {{"bound", check.bound},
            {"disagreements", arr},
            {"members", check.members},
            {"ok", check.ok()}};
}

json instance_to_json(const ProblemInstance& inst) {
    return {{"a", inst.a}, {"alpha", inst.alpha}, {"b", inst.b}, {"beta", inst.beta}};
}

void emit(const json& j, std::ostream& out) { out << j.dump(2) << '\n'; }

}  // namespace

std::vector<Int> parse_int_list(const std::string& text) {
    std::vector<Int> out;
    std::size_t pos = 0;
    if (text.empty()) fail(Errc::invalid_input, "empty integer list");
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::size_t end = comma == std::string::npos ? text.size() : comma;
        std::size_t begin = pos;
        while (begin < end && text[begin] == ' ') ++begin;
        std::size_t stop = end;
        while (stop > begin && text[stop - 1] == ' ') --stop;
        Int value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + begin, text.data() + stop, value);
        if (ec != std::errc() || ptr != text.data() + stop)
            fail(Errc::invalid_input, "bad integer in list: \"" + text.substr(pos, end - pos) + '"');
        out.push_back(value);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

ProblemInstance instance_from_json(const json& j) {
    if (!j.is_object()) fail(Errc::invalid_input, "instance JSON must be an object");
    ProblemInstance inst;
    inst.a = json_int_array(j, "a");
    inst.b = json_int_array(j, "b");
    inst.alpha = json_int(j, "alpha", 0, false);
    inst.beta = json_int(j, "beta", 0, false);
    return inst;
}

TransportSpec transport_from_json(const json& j) {
    if (!j.is_object()) fail(Errc::invalid_input, "transport JSON must be an object");
    TransportSpec spec;
    spec.capacities = json_int_array(j, "capacities");
    spec.costs = json_int_array(j, "costs");
    spec.price = json_int(j, "price", 0, true);
    spec.profit = json_int(j, "profit", 0, true);
    spec.spare = json_int(j, "spare", 0, false);
    return spec;
}

json report_to_json(const SolveReport& report, std::optional<Int> bound) {
    const MonoidDescriptor& m = report.monoid;
    Int horizon = bound ? *bound : default_horizon(m);
    json j;
    j["and_beyond"] = m.is_numerical && horizon >= m.conductor;
    j["c_intervals"] = intervals_to_json(report.c_intervals);
    j["c_set"] = points_to_json(report.cd ? report.cd->c_set : VecSet{});
    j["case"] = to_string(report.case_tag);
    j["conductor"] = m.conductor;
    j["d_intervals"] = intervals_to_json(report.d_intervals);
    j["d_set"] = points_to_json(report.cd ? report.cd->d_set : report.a_generators);
    j["discarded_minimals"] = points_to_json(report.cd ? report.cd->discarded : VecSet{});
    j["elements"] = enumerate_elements(m, horizon);
    j["frobenius"] = m.frobenius ? json(*m.frobenius) : json(nullptr);
    j["gaps"] = m.gaps;
    j["gcd"] = m.d;
    j["min_generators"] = m.min_generators;
    j["zero_in_s"] = report.zero_in_s;
    return j;
}

void render_report_text(const SolveReport& report, std::optional<Int> bound, std::ostream& out) {
    const MonoidDescriptor& m = report.monoid;
    out << "case: " << to_string(report.case_tag);
    if (report.witness_index) out << " (witness coordinate " << *report.witness_index + 1 << ")";
    out << '\n';
    out << "zero in S: " << (report.zero_in_s ? "yes" : "no") << '\n';
    out << "gcd: " << m.d << '\n';
    out << "minimal generators: " << fmt_values(m.min_generators) << '\n';
    if (m.frobenius)
        out << "frobenius: " << *m.frobenius << "  conductor: " << m.conductor << '\n';
    else
        out << "frobenius: none  conductor: " << m.conductor << '\n';
    out << "gaps: " << fmt_values(m.gaps) << '\n';
    out << "elements: " << fmt_monoid_listing(m, bound ? *bound : default_horizon(m)) << '\n';
    out << "audit:\n";
    if (report.cd) {
        out << "  d_set: " << fmt_points(report.cd->d_set) << '\n';
        out << "  c_set: " << fmt_points(report.cd->c_set) << '\n';
        out << "  discarded minimals: " << fmt_points(report.cd->discarded) << '\n';
    } else {
        out << "  cone generators: " << fmt_points(report.a_generators) << '\n';
    }
    out << "  D intervals: " << fmt_intervals(report.d_intervals) << "  D values: "
        << fmt_values(report.d_values) << '\n';
    if (report.cd)
        out << "  C intervals: " << fmt_intervals(report.c_intervals) << "  C values: "
            << fmt_values(report.c_values) << '\n';
}

namespace {

struct Commands {
    // solve / verify / member share the instance flags
    InstanceArgs solve_inst, verify_inst, member_inst;
    bool solve_json = false, verify_json = false, member_json = false;
    bool closure_json = false, hilbert_json = false, transport_json = false;
    std::optional<Int> solve_bound;
    Int verify_bound = 200;
    Int member_n = 0;
    bool member_witness = false;
    std::string closure_set, closure_bset, hilbert_coeffs;
    std::string transport_capacities, transport_costs, transport_input;
    Int transport_price = 0, transport_profit = 0, transport_spare = 0;

    CLI::App* solve_cmd = nullptr;
    CLI::App* verify_cmd = nullptr;
    CLI::App* closure_cmd = nullptr;
    CLI::App* hilbert_cmd = nullptr;
    CLI::App* member_cmd = nullptr;
    CLI::App* transport_cmd = nullptr;
};

int run_solve(const Commands& c, std::ostream& out) {
    SolveReport report = solve(c.solve_inst.load());
    if (c.solve_json)
        emit(report_to_json(report, c.solve_bound), out);
    else
        render_report_text(report, c.solve_bound, out);
    return 0;
}

int run_verify(const Commands& c, std::ostream& out) {
    SolveReport report = solve(c.verify_inst.load());
    OracleReport check = agree(report, c.verify_bound);
    if (c.verify_json) {
        emit(json{{"report", report_to_json(report)},
                  {"verification", verification_to_json(check)}},
             out);
    } else {
        render_report_text(report, std::nullopt, out);
        render_verification_text(check, out);
    }
    return check.ok() ? 0 : 2;
}

int run_closure(const Commands& c, std::ostream& out) {
    GeneratorSet seed(parse_int_list(c.closure_set));
    GeneratorSet steps(c.closure_bset.empty() ? std::vector<Int>{}
                                              : parse_int_list(c.closure_bset));
    ClosureTrace trace;
    MonoidDescriptor m = smallest_b_monoid(seed, steps, &trace);
    Int horizon = default_horizon(m);
    if (c.closure_json) {
        json tr = json::array();
        for (const auto& round : trace.msg_per_round) tr.push_back(round);
        emit(json{{"and_beyond", m.is_numerical},
                  {"conductor", m.conductor},
                  {"elements", enumerate_elements(m, horizon)},
                  {"frobenius", m.frobenius ? json(*m.frobenius) : json(nullptr)},
                  {"gaps", m.gaps},
                  {"gcd", m.d},
                  {"is_numerical", m.is_numerical},
                  {"min_generators", m.min_generators},
                  {"trace", tr}},
             out);
        return 0;
    }
    for (std::size_t i = 0; i < trace.msg_per_round.size(); ++i)
        out << "round " << i << " msg: " << fmt_values(trace.msg_per_round[i]) << '\n';
    out << "minimal generators: " << fmt_values(m.min_generators) << '\n';
    out << "gcd: " << m.d << '\n';
    if (m.frobenius)
        out << "frobenius: " << *m.frobenius << "  conductor: " << m.conductor << '\n';
    else
        out << "frobenius: none  conductor: " << m.conductor << '\n';
    out << "monoid: " << fmt_monoid_listing(m, horizon) << '\n';
    return 0;
}

int run_hilbert(const Commands& c, std::ostream& out) {
    IntVec coeffs = parse_int_list(c.hilbert_coeffs);
    Int budget = pottier_budget(coeffs);
    VecSet mins = minimal_homogeneous_solutions(coeffs);
    if (c.hilbert_json) {
        emit(json{{"budget", budget}, {"coeffs", coeffs}, {"minimal_solutions", points_to_json(mins)}},
             out);
        return 0;
    }
    out << "budget on the coordinate sum: " << budget << '\n';
    out << mins.size() << " minimal non-zero solutions\n";
    for (const NatVec& v : mins) out << "  " << fmt_point(v) << '\n';
    return 0;
}

int run_member(const Commands& c, std::ostream& out) {
    if (c.member_n < 0) fail(Errc::invalid_input, "--n must be non-negative");
    SolveReport report = solve(c.member_inst.load());
    MembershipAnswer answer = membership_with_witness(c.member_n, report);
    if (!c.member_witness) answer.witness.reset();
    if (c.member_json) {
        emit(json{{"adjoined_zero", answer.adjoined_zero},
                  {"member", answer.member},
                  {"n", c.member_n},
                  {"witness", answer.witness ? json(*answer.witness) : json(nullptr)}},
             out);
        return 0;
    }
    if (answer.adjoined_zero)
        out << "0 lies in S ∪ {0} as the adjoined identity; 0 itself is not feasible\n";
    else if (answer.member) {
        out << c.member_n << " is a member of S";
        if (answer.witness) out << ", witness x = " << fmt_point(*answer.witness);
        out << '\n';
    } else {
        out << c.member_n << " is not a member of S\n";
    }
    return 0;
}

int run_transport(const Commands& c, std::ostream& out) {
    TransportSpec spec;
    if (!c.transport_input.empty()) {
        spec = transport_from_json(load_json_file(c.transport_input));
    } else {
        if (c.transport_capacities.empty() || c.transport_costs.empty())
            fail(Errc::invalid_input, "provide --capacities and --costs, or --input");
        spec.capacities = parse_int_list(c.transport_capacities);
        spec.costs = parse_int_list(c.transport_costs);
        spec.price = c.transport_price;
        spec.profit = c.transport_profit;
        spec.spare = c.transport_spare;
    }
    ProblemInstance inst = reduce_transport(spec);
    SolveReport report = solve(inst);
    std::optional<Int> minimum;
    if (report.zero_in_s)
        minimum = 0;
    else if (!report.monoid.min_generators.empty())
        minimum = report.monoid.min_generators.front();
    if (c.transport_json) {
        emit(json{{"instance", instance_to_json(inst)},
                  {"minimum_profitable_load", minimum ? json(*minimum) : json(nullptr)},
                  {"report", report_to_json(report)}},
             out);
        return 0;
    }
    out << "reduced instance: a=" << fmt_values(inst.a) << " b=" << fmt_values(inst.b)
        << " alpha=" << inst.alpha << " beta=" << inst.beta << '\n';
    if (minimum)
        out << "minimum profitable load: " << *minimum << " cars\n";
    else
        out << "no profitable load exists\n";
    render_report_text(report, std::nullopt, out);
    return 0;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact solver for two-sided linear Diophantine inequality systems"};
    app.require_subcommand(1);
    Commands c;

    c.solve_cmd = app.add_subcommand("solve", "compute the monoid of attainable values");
    c.solve_inst.wire(c.solve_cmd);
    c.solve_cmd->add_flag("--json", c.solve_json, "machine-readable output");
    Int solve_bound_raw = -1;
    c.solve_cmd->add_option("--bound", solve_bound_raw, "list elements up to this bound");

    c.verify_cmd = app.add_subcommand("verify", "solve, then cross-check against brute force");
    c.verify_inst.wire(c.verify_cmd);
    c.verify_cmd->add_flag("--json", c.verify_json, "machine-readable output");
    c.verify_cmd->add_option("--bound", c.verify_bound, "check every n up to this bound");

    c.closure_cmd = app.add_subcommand("closure", "smallest step-closed monoid containing a set");
    c.closure_cmd->add_option("--set", c.closure_set, "seed generators")->required();
    c.closure_cmd->add_option("--b-set", c.closure_bset, "step values");
    c.closure_cmd->add_flag("--json", c.closure_json, "machine-readable output");

    c.hilbert_cmd = app.add_subcommand("hilbert", "minimal non-zero solutions of c.x = 0");
    c.hilbert_cmd->add_option("--coeffs", c.hilbert_coeffs, "equation coefficients (use --coeffs=-1,1,-1)")
        ->required();
    c.hilbert_cmd->add_flag("--json", c.hilbert_json, "machine-readable output");

    c.member_cmd = app.add_subcommand("member", "membership query with optional witness");
    c.member_inst.wire(c.member_cmd);
    c.member_cmd->add_option("--n,-n", c.member_n, "value to test")->required();
    c.member_cmd->add_flag("--witness", c.member_witness, "search for a witness vector");
    c.member_cmd->add_flag("--json", c.member_json, "machine-readable output");

    c.transport_cmd = app.add_subcommand("transport", "word problem: minimum profitable load");
    auto* ocap = c.transport_cmd->add_option("--capacities", c.transport_capacities, "cars per truck type");
    auto* ocost = c.transport_cmd->add_option("--costs", c.transport_costs, "cost per truck type");
    auto* oprice = c.transport_cmd->add_option("--price", c.transport_price, "price per transported car");
    auto* oprofit = c.transport_cmd->add_option("--profit", c.transport_profit, "required minimum profit");
    auto* ospare = c.transport_cmd->add_option("--spare", c.transport_spare, "extra unpaid cars loaded");
    auto* oti = c.transport_cmd->add_option("--input", c.transport_input, "transport JSON file");
    oti->excludes(ocap)->excludes(ocost)->excludes(oprice)->excludes(oprofit)->excludes(ospare);
    c.transport_cmd->add_flag("--json", c.transport_json, "machine-readable output");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
        if (solve_bound_raw >= 0) c.solve_bound = solve_bound_raw;
        if (c.solve_cmd->parsed()) return run_solve(c, out);
        if (c.verify_cmd->parsed()) return run_verify(c, out);
        if (c.closure_cmd->parsed()) return run_closure(c, out);
        if (c.hilbert_cmd->parsed()) return run_hilbert(c, out);
        if (c.member_cmd->parsed()) return run_member(c, out);
        if (c.transport_cmd->parsed()) return run_transport(c, out);
        err << "no command given\n";
        return 1;
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace diomon::cli
