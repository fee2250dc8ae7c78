#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

#ifndef MONOPOLE_CLI_PATH
#error "MONOPOLE_CLI_PATH must point at the CLI binary"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& arguments)
{
    std::string cmd = std::string(MONOPOLE_CLI_PATH) + " " + arguments + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

nlohmann::json parse(const RunResult& r)
{
    return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("invariants command")
{
    auto r = run_cli("invariants --lattice 3H+2E8m");
    CHECK(r.exit_code == 0);
    auto j = parse(r);
    CHECK(j.at("signature") == -16);
    CHECK(j.at("b_plus") == 3);

    auto r2 = run_cli("invariants --lattice 10H+6E8m --spin");
    auto j2 = parse(r2);
    CHECK(j2.at("d") == 6);
}

TEST_CASE("exit codes are a function of the verdict")
{
    CHECK(run_cli("check furuta --lattice 2H+2E8m --spin").exit_code == 3);
    CHECK(run_cli("check furuta --lattice 3H+2E8m --spin").exit_code == 0);
    CHECK(run_cli("check furuta --lattice 3D1m").exit_code == 0);  // not applicable
    CHECK(run_cli("check donaldson --lattice E8m --spin").exit_code == 3);
    CHECK(run_cli("check donaldson --lattice 8D1m --c2 -8").exit_code == 0);
}

TEST_CASE("input errors exit with code 1 and carry positions")
{
    auto r = run_cli("check donaldson --lattice 2H+4X1 --spin");
    CHECK(r.exit_code == 1);
    auto j = parse(r);
    CHECK(j.contains("error"));
    CHECK(j.at("position") == 4);

    CHECK(run_cli("check donaldson --lattice E8m --c2 3").exit_code == 1);
    CHECK(run_cli("check zp -p 4 --lattice 4H+E8m --c2 -8 --d 0,0,0,0").exit_code == 1);
    CHECK(run_cli("scenario spin-family -a 2 -b 1").exit_code == 1);
}

TEST_CASE("scenario json round trips through check --json")
{
    struct Case {
        const char* gen;
        const char* checker;
    };
    for (const Case& c : {Case{"scenario branched-cover -p 3 -g 5 -b 1", "zp"},
                          Case{"scenario spin-family -a 3 -b 1", "spin-family"},
                          Case{"scenario nonspin-family -a 1 -b 0", "family-euler"}}) {
        auto scen = run_cli(c.gen);
        CHECK(scen.exit_code == 3);
        auto sj = parse(scen);

        std::string path = std::string("cli_roundtrip_") + c.checker + ".json";
        std::ofstream(path) << sj.dump();
        auto rerun = run_cli(std::string("check ") + c.checker + " --json " + path);
        CHECK(rerun.exit_code == 3);
        CHECK(parse(rerun) == sj.at("report"));
        std::remove(path.c_str());
    }
}

TEST_CASE("per-checker flags match the json route")
{
    auto flags = run_cli("check z2 --lattice 3H+E8m --c2 0 --d-plus 1 --d-minus 0 --inv-dim 0");
    CHECK(flags.exit_code == 3);
    auto j = parse(flags);
    CHECK(j.at("witness").at("failing_signs") == nlohmann::json::array({"+"}));

    auto even = run_cli("check even-involution --sigma -16 --inv-dim 3 --type even");
    CHECK(even.exit_code == 0);
    CHECK(parse(even).at("verdict") == "consistent");

    auto ten = run_cli("check ten-eighths-equivariant -p 3 --hplus 2,0,0 --v 0,1,1 --vp 0,0,0");
    CHECK(ten.exit_code == 3);
    CHECK(parse(ten).at("witness").at("refined") == true);
}

TEST_CASE("catalog exits cleanly with a zero-mismatch table")
{
    auto r = run_cli("catalog --json");
    CHECK(r.exit_code == 0);
    auto j = parse(r);
    CHECK(j.at("mismatches") == 0);
    CHECK(j.at("rows").size() == 16);
}
