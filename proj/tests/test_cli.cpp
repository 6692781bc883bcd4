// CLI end-to-end tests. argv[1] = path to the recip binary,
// argv[2] = path to the test data directory.
#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <string>

#include <json.hpp>

namespace {

std::string g_cli, g_data;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string outfile = "cli_test_out.tmp";
    const std::string cmd = g_cli + " " + args + " > " + outfile + " 2>&1";
    const int rc = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    std::ifstream in(outfile);
    std::string line;
    while (std::getline(in, line)) r.out += line + "\n";
    std::remove(outfile.c_str());
    return r;
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

} // namespace

TEST_CASE("analyze: valid curves exit 0") {
    for (const char* s : {"y^2 - x^3 + x", "x^3 + y^3 - 1", "y - x^3", "x^3 - x*y - y"}) {
        const auto r = run("analyze " + quoted(s));
        CHECK(r.exit_code == 0);
        CHECK(!r.out.empty());
    }
}

TEST_CASE("analyze: invalid input exits 2") {
    CHECK(run("analyze " + quoted("3")).exit_code == 2);        // constant
    CHECK(run("analyze " + quoted("x^")).exit_code == 2);       // syntax error
    CHECK(run("analyze " + quoted("x^2")).exit_code == 2);      // not squarefree
}

TEST_CASE("analyze --json: schema fields and values") {
    const auto r = run("--json analyze " + quoted("y^2 - x^3 + x"));
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["input"] == "-x^3 + y^2 + x");
    CHECK(j["egyptian"] == false);
    CHECK(j["points_at_infinity"] == 1);
    CHECK(j["places_at_infinity"] == 1);
    CHECK(j["places_exact"] == true);
    CHECK(j["unique_point"] == "[0:0:1]");
    CHECK(j["regular_at_infinity"] == true);
    CHECK(j["semigroup_generators"] == nlohmann::json::array({2, 3}));
    CHECK(j["genus"] == 1);
    CHECK(j["mu"] == 2);
    CHECK(j["weierstrass_point"] == false);
    CHECK(j["v_recip_kind"] == "Exact");
    CHECK(j["dvr"] == false);
    CHECK(j["colength"] == 1);
    CHECK(j["status"] == "ok");
    CHECK(j["version"].is_string());
    CHECK(j["timing_ms"].is_number());
}

TEST_CASE("analyze --json: Egyptian curve leaves the semigroup fields null") {
    const auto r = run("--json analyze " + quoted("x^3 + y^3 - 1"));
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["egyptian"] == true);
    CHECK(j["points_at_infinity"] == 3);
    CHECK(j["unique_point"].is_null());
    CHECK(j["semigroup_generators"].is_null());
    CHECK(j["genus"].is_null());
    CHECK(j["dvr"].is_null());
}

TEST_CASE("JSON output is byte-identical across runs modulo timing") {
    auto strip_timing = [](std::string s) {
        return std::regex_replace(s, std::regex("\"timing_ms\":[^,}]*"), "\"timing_ms\":0");
    };
    for (const char* s : {"y^2 - x^3 + x", "y^2 - x^5 - 1", "x^3 + y^3 - 1"}) {
        const auto a = run("--json analyze " + quoted(s));
        const auto b = run("--json analyze " + quoted(s));
        CHECK(strip_timing(a.out) == strip_timing(b.out));
    }
}

TEST_CASE("corpus: worked examples all analyze, exit 0") {
    const auto r = run("corpus " + quoted(g_data + "/worked_examples.txt"));
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("x^3 + y^3 - 1") != std::string::npos);
    CHECK(r.out.find("ERROR") == std::string::npos);

    const auto rj = run("--json corpus " + quoted(g_data + "/worked_examples.txt"));
    REQUIRE(rj.exit_code == 0);
    // one JSON document per line; verify the known verdicts
    std::istringstream lines(rj.out);
    std::string line;
    int n = 0;
    while (std::getline(lines, line)) {
        const auto j = nlohmann::json::parse(line);
        CHECK(j["status"] == "ok");
        if (j["input"] == "x^3 + y^3 - 1") {
            CHECK(j["egyptian"] == true);
            CHECK(j["points_at_infinity"] == 3);
        }
        if (j["input"] == "-x^3 + y^2 + x") CHECK(j["genus"] == 1);
        if (j["input"] == "x^3 - x*y - y") {
            CHECK(j["egyptian"] == true);
            CHECK(j["places_at_infinity"] == 2);
        }
        if (j["input"] == "-x^3 + y") CHECK(j["dvr"] == true);
        ++n;
    }
    CHECK(n == 4);
}

TEST_CASE("corpus: mixed file row values") {
    const auto rj = run("--json corpus " + quoted(g_data + "/mixed.txt"));
    REQUIRE(rj.exit_code == 0);
    std::istringstream lines(rj.out);
    std::string line;
    int n = 0;
    while (std::getline(lines, line)) {
        const auto j = nlohmann::json::parse(line);
        CHECK(j["status"] == "ok");
        if (j["input"] == "y^2 - x^5 - 1") {
            CHECK(j["genus"] == 2);
            CHECK(j["weierstrass_point"] == true);
            CHECK(j["v_recip_kind"] == "Sandwich");
        }
        if (j["input"] == "x^4 + y^3 + y") CHECK(j["genus"] == 3);
        if (j["input"] == "x^2 + y^2 - 1") {
            CHECK(j["egyptian"] == true);
            CHECK(j["points_at_infinity"] == 2);
        }
        ++n;
    }
    CHECK(n == 7);
}

TEST_CASE("corpus: a bad line fails the aggregate with exit 1") {
    const auto r = run("corpus " + quoted(g_data + "/bad_line.txt"));
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("ERROR") != std::string::npos);
}

TEST_CASE("corpus: empty file is vacuously ok; missing file exits 2") {
    CHECK(run("corpus " + quoted(g_data + "/empty.txt")).exit_code == 0);
    CHECK(run("corpus " + quoted(g_data + "/no_such_file.txt")).exit_code == 2);
}

int main(int argc, char** argv) {
    if (argc < 3) {
        std::fprintf(stderr, "usage: test_cli <recip-binary> <data-dir>\n");
        return 1;
    }
    g_cli = argv[1];
    g_data = argv[2];
    doctest::Context ctx;
    return ctx.run();
}
