#pragma once

#include <string>
#include <vector>

#include "monopole/obstruction.hpp"

namespace monopole {

// Reproduction of a worked construction: the generated hypothesis (in the
// CLI's JSON schema), the checker it feeds, the resulting report, and the
// construction-level flags the result carries.
struct Scenario {
    std::string id;
    std::string description;
    std::string check_name;
    Json hypothesis;
    ObstructionReport report;
    Json flags = Json::object();
    Json extras = Json::object();

    Json to_json() const;
};

// Branched-cover Z/p action on # g(p-1) (S^2 x S^2) # 2bp (-E8): locally
// linear by construction, smoothable as a manifold when g(p-1) >= 3bp, yet
// never realizable by a smooth Z/p action.
Scenario scenario_branched_cover(long p, long long g, long long b);

// Spin mapping-torus family over T^{a-2} with fibre # a (S^2 x S^2) # 2b (-E8).
Scenario scenario_spin_family(long long a, long long b);

// Non-spin mapping-torus family over T^a with fibre
// # a (S^2 x S^2) # b (-CP^2) # (-E8) # (-CP^2_fake); trivializing the H+
// bundle silences the hypothesis (sanity override).
Scenario scenario_nonspin_family(long long a, long long b, bool trivialize_bundle = false);

struct GridSummary {
    long long cases = 0;
    long long mismatches = 0;
};

// Closed-form verdict (d_+, d_- <= 0) against the Laurent divisibility
// certificate, exhaustively over |d_pm| <= d_range, 0 <= b+ <= b_plus_max.
GridSummary z2_oracle_grid(long long d_range, long long b_plus_max);

// Sign condition (all d_j + d_{p-j} <= 0) against the cyclotomic divisibility
// certificate, exhaustively over |d_j| <= d_bound and symmetric h_j in
// [0, h_bound].
GridSummary zp_oracle_grid(long p, long long d_bound, long long h_bound);

// check_even_involution's closed form against the projective-family pipeline
// over all b+ <= b_plus_max and all u + v = b+ splits.
GridSummary even_involution_pipeline_grid(long long b_plus_max);

// check_furuta_point against the closed form over the (sigma, b+) grid.
GridSummary furuta_sweep(const std::vector<long long>& sigmas, long long b_plus_max);

// The algebraic identity suite: c(V)s(V) = 1 on randomized Chern inputs,
// Whitney multiplicativity, tr_k(psi2 r) = tr_2k(r), lambda multiplicativity,
// the Pin(2) mu-product table, and prod_j (1 - w^j) = p.
GridSummary identity_suite(int chern_trials);

struct CatalogRow {
    std::string id;
    std::string expected;
    std::string actual;
    bool ok = false;
};

// Every worked example and equivalence grid, with its expected outcome.
std::vector<CatalogRow> run_catalog();

std::string catalog_table(const std::vector<CatalogRow>& rows);

}  // namespace monopole
