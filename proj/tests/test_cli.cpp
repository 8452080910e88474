#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli_cases.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string command = std::string(WITT_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string read_golden(const std::string& name) {
    const std::string path = std::string(WITT_GOLDEN_DIR) + "/" + name + ".txt";
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "missing golden file ", path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

} // namespace

TEST_CASE("golden files for every subcommand") {
    for (const auto& c : witt_tests::cli_cases()) {
        CAPTURE(c.name);
        const RunResult r = run_cli(c.args);
        CHECK(r.exit_code == c.expected_exit);
        CHECK(r.output == read_golden(c.name));
    }
}

TEST_CASE("outputs are byte-stable across runs") {
    for (const std::string args :
         {std::string("universal sum --n 2 --json"), std::string("ghost --ring int --profile full:3 1,2,3 --json")}) {
        const RunResult a = run_cli(args);
        const RunResult b = run_cli(args);
        CHECK(a.output == b.output);
        CHECK(a.exit_code == 0);
    }
}

TEST_CASE("exit codes distinguish parse and domain errors") {
    // parse errors -> 2
    CHECK(run_cli("add --ring zmod:4 --profile full:2 1,1,1 1,0").exit_code == 2);
    CHECK(run_cli("add --ring nosuch --profile full:2 1,1 1,0").exit_code == 2);
    CHECK(run_cli("ghost --ring int --profile grid:3 1,2,3").exit_code == 2);
    CHECK(run_cli("nosuchcommand").exit_code == 2);
    // domain errors -> 1
    CHECK(run_cli("unghost --ring int --profile full:3 0,1,0").exit_code == 1);
    CHECK(run_cli("frob --n 5 --ring int --profile full:4 1,2,3,4").exit_code == 1);
    CHECK(run_cli("universal sum --n 26").exit_code == 1);
    CHECK(run_cli("universal epsilon --p 4 --terms 2").exit_code == 1);
}

TEST_CASE("reduced selfcheck runs green") {
    const RunResult r = run_cli("selfcheck --trials 2 --level 6");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("[FAIL]") == std::string::npos);
    CHECK(r.output.find("selfcheck: all checks passed") != std::string::npos);
}
