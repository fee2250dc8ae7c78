// Acceptance gate: every criterion below must hold exactly, inside its time
// budget.  One line is printed per criterion; the exit code is the number of
// failures.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "monopole/json_io.hpp"
#include "monopole/scenario.hpp"

using namespace monopole;
using nlohmann::json;

namespace {

#ifndef MONOPOLE_CLI_PATH
#error "MONOPOLE_CLI_PATH must point at the CLI binary"
#endif

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& arguments)
{
    std::string cmd = std::string(MONOPOLE_CLI_PATH) + " " + arguments + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    RunResult r;
    if (!pipe)
        return r;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

int failures = 0;

void criterion(int number, const std::string& name, double budget_seconds,
               const std::function<bool(std::string&)>& body)
{
    std::string detail;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (elapsed > budget_seconds) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over budget: ") +
                  std::to_string(elapsed) + " s > " + std::to_string(budget_seconds) + " s";
    }
    std::printf("%s  criterion-%d  %-28s  (%.2f s / %.0f s)%s%s\n", ok ? "PASS" : "FAIL", number,
                name.c_str(), elapsed, budget_seconds, detail.empty() ? "" : "  -- ",
                detail.c_str());
    if (!ok)
        ++failures;
}

bool expect(bool cond, const std::string& what, std::string& detail)
{
    if (!cond && detail.empty())
        detail = what;
    return cond;
}

}  // namespace

int main()
{
    // 1. Donaldson instance, through the CLI.
    criterion(1, "donaldson-instance", 1.0, [](std::string& detail) {
        auto r1 = run_cli("check donaldson --lattice E8m --spin");
        auto j1 = json::parse(r1.out);
        bool ok = expect(r1.exit_code == 3, "E8m exit code", detail) &&
                  expect(j1.at("verdict") == "obstructed", "E8m verdict", detail) &&
                  expect(j1.at("witness").at("d") == 1, "E8m d", detail);
        auto r2 = run_cli("check donaldson --lattice 8D1m --c2 -8");
        auto j2 = json::parse(r2.out);
        auto L = IntersectionLattice::parse("8D1m");
        ok = ok && expect(r2.exit_code == 0, "8D1m exit code", detail) &&
             expect(j2.at("verdict") == "consistent", "8D1m verdict", detail) &&
             expect(dirac_index(L, SpinCData::with_c_squared(Int(-8))) == 0, "8D1m d", detail);
        return ok;
    });

    // 2. Furuta boundary over b+ <= 12, sigma in {-16, -32, -48}.
    criterion(2, "furuta-boundary", 1.0, [](std::string& detail) {
        bool ok = true;
        for (long long sigma : {-16LL, -32LL, -48LL}) {
            for (long long bp = 0; bp <= 12; ++bp) {
                auto L = IntersectionLattice::single(Block::H, bp)
                             .add(Block::E8Minus, -sigma / 8);
                bool obstructed = check_furuta_point(L).obstructed();
                bool boundary = bp <= -sigma / 8;  // {0,1,2} at -16; <=4 at -32; <=6 at -48
                if (bp == 0)
                    boundary = true;  // d > 0 in all three columns
                std::ostringstream what;
                what << "sigma=" << sigma << " b+=" << bp;
                ok = ok && expect(obstructed == boundary, what.str(), detail);
            }
        }
        ok = ok && expect(check_furuta_point(IntersectionLattice::parse("2H+2E8m")).obstructed(),
                          "2H+2E8m", detail) &&
             expect(!check_furuta_point(IntersectionLattice::parse("3H+2E8m")).obstructed(),
                    "K3", detail);
        return ok;
    });

    // 3. Even-involution closed form == projective-family pipeline, b+ <= 30.
    criterion(3, "even-involution", 5.0, [](std::string& detail) {
        bool ok = true;
        for (long long inv = 0; inv <= 6; ++inv) {
            bool obstructed = check_even_involution(-16, inv, InvolutionType::Even).obstructed();
            ok = ok && expect(obstructed == (inv <= 2),
                              "closed form at inv_dim=" + std::to_string(inv), detail);
        }
        auto grid = even_involution_pipeline_grid(30);
        ok = ok && expect(grid.cases == 496, "case count", detail) &&
             expect(grid.mismatches == 0,
                    std::to_string(grid.mismatches) + " pipeline mismatches", detail);
        return ok;
    });

    // 4. Z_p branched-cover catalog entries.
    criterion(4, "branched-cover-catalog", 1.0, [](std::string& detail) {
        auto s = scenario_branched_cover(3, 5, 1);
        bool ok = expect(s.hypothesis.at("lattice") == "10H+6E8m", "lattice", detail) &&
                  expect(s.extras.at("invariants").at("d") == 6, "d=6", detail) &&
                  expect(s.report.obstructed(), "verdict", detail) &&
                  expect(s.flags.at("locally_linear_realizable") == true, "flag (i)", detail) &&
                  expect(s.flags.at("smooth_structure_exists") == true, "flag (ii-a)", detail) &&
                  expect(s.flags.at("wall_realizable") == true, "flag (ii-b)", detail);
        auto s2 = scenario_branched_cover(5, 12, 1);
        ok = ok && expect(s2.extras.at("invariants").at("d") == 10, "p5 d=10", detail) &&
             expect(s2.flags.at("smooth_structure_exists") == true, "p5 smooth", detail) &&
             expect(s2.flags.at("wall_realizable") == true, "p5 wall", detail) &&
             expect(s2.report.obstructed(), "p5 verdict", detail);
        return ok;
    });

    // 5. Z_2 oracle equivalence on the exhaustive grid.
    criterion(5, "oracle-equivalence-z2", 10.0, [](std::string& detail) {
        auto g = z2_oracle_grid(6, 8);
        return expect(g.cases == 13 * 13 * 9, "case count", detail) &&
               expect(g.mismatches == 0, std::to_string(g.mismatches) + " mismatches", detail);
    });

    // 6. Z_p oracle equivalence, p in {3, 5}.
    criterion(6, "oracle-equivalence-zp", 60.0, [](std::string& detail) {
        auto g3 = zp_oracle_grid(3, 3, 3);
        auto g5 = zp_oracle_grid(5, 3, 3);
        return expect(g3.cases == 343 * 4, "p=3 case count", detail) &&
               expect(g3.mismatches == 0, "p=3 mismatches", detail) &&
               expect(g5.cases == 16807 * 16, "p=5 case count", detail) &&
               expect(g5.mismatches == 0, "p=5 mismatches", detail);
    });

    // 7. Algebraic identity suites.
    criterion(7, "identity-suites", 10.0, [](std::string& detail) {
        auto s = identity_suite(200);
        return expect(s.mismatches == 0, std::to_string(s.mismatches) + " mismatches", detail);
    });

    // 8. Mapping-torus family scenarios.
    criterion(8, "family-scenarios", 1.0, [](std::string& detail) {
        auto spin = scenario_spin_family(3, 1);
        bool ok = expect(spin.report.obstructed(), "spin verdict", detail) &&
                  expect(spin.report.witness.at("nonzero_w_indices") == json::array({1}),
                         "spin witness w_{b+-2}", detail) &&
                  expect(spin.extras.at("torus_dim") == 1, "spin torus dim", detail) &&
                  expect(spin.extras.at("torus_dim_formula") == "min(b_plus, b_minus) - 2",
                         "spin torus formula", detail);
        auto ns = scenario_nonspin_family(1, 0);
        ok = ok && expect(ns.report.obstructed(), "nonspin verdict", detail) &&
             expect(ns.report.witness.at("nonzero_class").at("degree") == 1,
                    "nonspin witness w_{b+}", detail) &&
             expect(ns.extras.at("torus_dim") == 1, "nonspin torus dim", detail) &&
             expect(ns.extras.at("torus_dim_formula") == "min(b_plus, b_minus)",
                    "nonspin torus formula", detail);
        return ok;
    });

    // 9. catalog reproduces everything and exits 0.
    criterion(9, "catalog", 120.0, [](std::string& detail) {
        auto r = run_cli("catalog --json");
        bool ok = expect(r.exit_code == 0, "exit code " + std::to_string(r.exit_code), detail);
        auto j = json::parse(r.out);
        return ok && expect(j.at("mismatches") == 0, "mismatch count", detail) &&
               expect(j.at("rows").size() == 16, "row count", detail);
    });

    std::printf("%d of 9 criteria passed\n", 9 - failures);
    return failures;
}
