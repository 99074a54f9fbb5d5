#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "cli.hpp"

using namespace diomon;
using nlohmann::json;

namespace {

struct Run {
    int status = 0;
    std::string out, err;
};

Run invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    int status = cli::run(std::move(args), out, err);
    return {status, out.str(), err.str()};
}

struct TempFile {
    std::string path;
    TempFile(const std::string& name, const std::string& content)
        : path("diomon_test_" + name) {
        std::ofstream f(path);
        f << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("solve renders the worked instance") {
    Run r = invoke({"solve", "--a", "4,5", "--b", "3,6", "--alpha", "3", "--beta", "1"});
    CHECK(r.status == 0);
    CHECK(r.out.find("case: numerical_semigroup") != std::string::npos);
    CHECK(r.out.find("{0, 23, 28, 29, 32, 33, 34, 35, 37, ->}") != std::string::npos);
    CHECK(r.out.find("c_set: {(0,4)}") != std::string::npos);
}

TEST_CASE("solve emits canonical JSON that round-trips byte-identically") {
    Run r = invoke({"solve", "--a", "4,5", "--b", "3,6", "--alpha", "3", "--beta", "1", "--json"});
    REQUIRE(r.status == 0);
    json j = json::parse(r.out);
    CHECK(j["case"] == "numerical_semigroup");
    CHECK(j["gcd"] == 1);
    CHECK(j["zero_in_s"] == false);
    CHECK(j["frobenius"] == 36);
    CHECK(j["conductor"] == 37);
    CHECK(j["c_set"] == json::array({{0, 4}}));
    CHECK(j["d_set"] == json::array({{0, 1}, {1, 1}}));
    CHECK(j["c_intervals"] == json::array({{23, 23}}));
    CHECK(j["discarded_minimals"] == json::array());
    CHECK(j["and_beyond"] == true);
    CHECK(j["elements"].back() == 37);
    CHECK(j.dump(2) + "\n" == r.out);
}

TEST_CASE("solve --bound widens the element listing") {
    Run r = invoke({"solve", "--a", "4,5", "--b", "3,6", "--alpha", "3", "--beta", "1", "--json",
                    "--bound", "40"});
    json j = json::parse(r.out);
    CHECK(j["elements"] == json::array({0, 23, 28, 29, 32, 33, 34, 35, 37, 38, 39, 40}));
}

TEST_CASE("solve reads instance JSON files") {
    TempFile file("instance.json", R"({"a":[4,5],"b":[3,6],"alpha":0,"beta":0})");
    Run r = invoke({"solve", "--input", file.path});
    CHECK(r.status == 0);
    CHECK(r.out.find("minimal generators: {5, 6, 9}") != std::string::npos);
    CHECK(r.out.find("frobenius: 13") != std::string::npos);
}

TEST_CASE("flag and file input are mutually exclusive") {
    TempFile file("both.json", R"({"a":[1],"b":[1]})");
    Run r = invoke({"solve", "--a", "1", "--b", "1", "--input", file.path});
    CHECK(r.status == 1);
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("invalid input exits with status 1") {
    CHECK(invoke({"solve", "--a", "4,5", "--b", "3"}).status == 1);
    CHECK(invoke({"solve", "--a", "4,x", "--b", "3,6"}).status == 1);
    CHECK(invoke({"solve"}).status == 1);
    CHECK(invoke({"solve", "--input", "does_not_exist.json"}).status == 1);
    CHECK(invoke({"frobnicate"}).status == 1);
}

TEST_CASE("help exits cleanly") {
    Run r = invoke({"--help"});
    CHECK(r.status == 0);
    CHECK(r.out.find("solve") != std::string::npos);
}

TEST_CASE("verify agrees with brute force and exits 0") {
    Run r = invoke({"verify", "--a", "4,5", "--b", "3,6", "--alpha", "3", "--beta", "1",
                    "--bound", "80", "--json"});
    CHECK(r.status == 0);
    json j = json::parse(r.out);
    CHECK(j["verification"]["ok"] == true);
    CHECK(j["verification"]["bound"] == 80);
    CHECK(j["verification"]["disagreements"] == json::array());
    CHECK(j["verification"]["members"][0] == 23);
}

TEST_CASE("closure reports the iteration trace") {
    Run r = invoke({"closure", "--set", "5,7", "--b-set", "2,3", "--json"});
    REQUIRE(r.status == 0);
    json j = json::parse(r.out);
    CHECK(j["min_generators"] == json::array({5, 7, 8, 9, 11}));
    CHECK(j["frobenius"] == 6);
    CHECK(j["trace"] == json::array({{5, 7}, {5, 7, 8, 9}, {5, 7, 8, 9, 11}}));

    Run text = invoke({"closure", "--set", "5,7", "--b-set", "2,3"});
    CHECK(text.out.find("{5, 7, 8, 9}") != std::string::npos);
    CHECK(text.out.find("monoid: {0, 5, 7, ->}") != std::string::npos);
}

TEST_CASE("hilbert lists minimal solutions") {
    Run r = invoke({"hilbert", "--coeffs=-1,1,-1", "--json"});
    REQUIRE(r.status == 0);
    json j = json::parse(r.out);
    CHECK(j["budget"] == 4);
    CHECK(j["minimal_solutions"] == json::array({{0, 1, 1}, {1, 1, 0}}));
}

TEST_CASE("member answers with and without witnesses") {
    Run yes = invoke({"member", "--a", "4,5", "--b", "3,6", "--alpha", "3", "--beta", "1", "-n",
                      "23", "--witness", "--json"});
    json jy = json::parse(yes.out);
    CHECK(jy["member"] == true);
    CHECK(jy["witness"] == json::array({0, 4}));

    Run no = invoke({"member", "--a", "4,5", "--b", "3,6", "--alpha", "3", "--beta", "1", "-n",
                     "22", "--json"});
    json jn = json::parse(no.out);
    CHECK(jn["member"] == false);
    CHECK(jn["witness"].is_null());

    Run zero = invoke({"member", "--a", "3", "--b", "2", "--alpha", "5", "-n", "0", "--json"});
    json jz = json::parse(zero.out);
    CHECK(jz["member"] == true);
    CHECK(jz["adjoined_zero"] == true);
}

TEST_CASE("transport reports the minimum profitable load") {
    Run r = invoke({"transport", "--capacities", "3,6", "--costs", "1200,1500", "--price", "300",
                    "--profit", "900", "--spare", "1"});
    CHECK(r.status == 0);
    CHECK(r.out.find("minimum profitable load: 23 cars") != std::string::npos);

    Run j = invoke({"transport", "--capacities", "3,6", "--costs", "1200,1500", "--price", "300",
                    "--profit", "900", "--spare", "1", "--json"});
    json jj = json::parse(j.out);
    CHECK(jj["minimum_profitable_load"] == 23);
    CHECK(jj["instance"]["a"] == json::array({4, 5}));
    CHECK(jj["instance"]["alpha"] == 3);

    TempFile file("transport.json",
                  R"({"capacities":[3,6],"costs":[1200,1500],"price":300,"profit":900,"spare":1})");
    Run f = invoke({"transport", "--input", file.path, "--json"});
    CHECK(json::parse(f.out)["minimum_profitable_load"] == 23);

    Run bad = invoke({"transport", "--capacities", "3", "--costs", "1200", "--price", "299"});
    CHECK(bad.status == 1);
    CHECK(bad.err.find("indivisible-cost") != std::string::npos);

    Run empty = invoke({"transport", "--capacities", "1", "--costs", "3", "--price", "1",
                        "--profit", "5", "--spare", "0"});
    CHECK(empty.status == 0);
    CHECK(empty.out.find("no profitable load exists") != std::string::npos);
}

TEST_CASE("verify JSON on a diagonal instance round-trips too") {
    Run r = invoke({"solve", "--a", "4,5", "--b", "3,5", "--json"});
    REQUIRE(r.status == 0);
    json j = json::parse(r.out);
    CHECK(j["case"] == "diagonal_submonoid");
    CHECK(j["gcd"] == 5);
    CHECK(j["min_generators"] == json::array({5}));
    CHECK(j["frobenius"].is_null());
    CHECK(j["and_beyond"] == false);
    CHECK(j.dump(2) + "\n" == r.out);
}
