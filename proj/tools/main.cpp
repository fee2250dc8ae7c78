#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "monopole/json_io.hpp"
#include "monopole/obstruction.hpp"
#include "monopole/scenario.hpp"

namespace {

using namespace monopole;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitObstructed = 3;

int report_exit_code(const ObstructionReport& r)
{
    return r.obstructed() ? kExitObstructed : kExitOk;
}

void print_json(const Json& j)
{
    std::cout << j.dump(2) << "\n";
}

Json load_hypothesis(const std::string& path)
{
    Json j;
    if (path == "-") {
        j = Json::parse(std::cin);
    } else {
        std::ifstream in(path);
        if (!in)
            throw std::invalid_argument("cannot open " + path);
        j = Json::parse(in);
    }
    // Scenario output re-fed as input: unwrap the embedded hypothesis.
    if (j.is_object() && j.contains("hypothesis"))
        return j.at("hypothesis");
    return j;
}

SpinCData spinc_from_flags(const std::optional<long long>& c2, bool spin)
{
    if (spin && c2 && *c2 != 0)
        throw std::invalid_argument("--spin means c^2 = 0; drop --c2");
    if (spin)
        return SpinCData::spin();
    if (!c2)
        throw std::invalid_argument("pass --c2 <int> or --spin");
    return SpinCData::with_c_squared(to_int(*c2));
}

// Shared flag state for the check subcommands.
struct CheckArgs {
    std::string json_path;
    std::string lattice;
    std::optional<long long> c2;
    bool spin = false;
    std::optional<long long> b_plus;
    std::optional<long long> sigma;
    std::optional<long long> inv_dim;
    std::optional<long long> d0;
    std::string type;
    long long p = 0;
    std::optional<long long> d_plus;
    std::optional<long long> d_minus;
    std::vector<long long> d;
    std::vector<long long> h;
    std::vector<long long> hplus;
    std::vector<long long> v;
    std::vector<long long> vp;
};

ZpActionHypothesis action_from_flags(const CheckArgs& a, long expected_p)
{
    ZpActionHypothesis h;
    h.p = expected_p > 0 ? expected_p : a.p;
    if (h.p <= 0)
        throw std::invalid_argument("pass -p <prime>");
    h.lattice = IntersectionLattice::parse(a.lattice);
    h.spinc = spinc_from_flags(a.c2, a.spin);
    h.index.p = h.p;
    if (!a.d.empty())
        h.index.d = a.d;
    else if (a.d_plus || a.d_minus)
        h.index.d = {a.d_plus.value_or(0), a.d_minus.value_or(0)};
    else
        throw std::invalid_argument("pass --d <list> (or --d-plus/--d-minus for p = 2)");
    h.invariant_dim = a.inv_dim.value_or(a.h.empty() ? 0 : a.h[0]);
    if (!a.h.empty()) {
        h.eigen_dims = a.h;
    } else {
        long long rest = h.lattice.b_plus() - h.invariant_dim;
        if (rest % (h.p - 1) != 0)
            throw std::invalid_argument("cannot infer eigenspace dimensions; pass --h <list>");
        h.eigen_dims.assign(static_cast<size_t>(h.p), rest / (h.p - 1));
        h.eigen_dims[0] = h.invariant_dim;
    }
    if (!a.type.empty())
        h.type = a.type == "even" ? InvolutionType::Even : InvolutionType::Odd;
    return h;
}

InvolutionType type_from_string(const std::string& t)
{
    if (t == "even")
        return InvolutionType::Even;
    if (t == "odd")
        return InvolutionType::Odd;
    throw std::invalid_argument("--type must be even or odd");
}

int run_check(const std::string& name, const CheckArgs& a)
{
    ObstructionReport report;
    if (!a.json_path.empty()) {
        report = run_named_check(name, load_hypothesis(a.json_path));
    } else if (name == "donaldson") {
        report = check_point_donaldson(IntersectionLattice::parse(a.lattice),
                                       spinc_from_flags(a.c2, a.spin));
    } else if (name == "furuta") {
        report = check_furuta_point(IntersectionLattice::parse(a.lattice), a.b_plus);
    } else if (name == "z2") {
        report = check_z2_action(action_from_flags(a, 2));
    } else if (name == "zp") {
        report = check_zp_action(action_from_flags(a, 0));
    } else if (name == "even-involution") {
        if (!a.sigma || !a.inv_dim || a.type.empty())
            throw std::invalid_argument("pass --sigma, --inv-dim and --type (or --json)");
        report = check_even_involution(*a.sigma, *a.inv_dim, type_from_string(a.type));
    } else if (name == "zp-spin") {
        if (!a.d0 || !a.inv_dim)
            throw std::invalid_argument("pass --d0 and --inv-dim (or --json)");
        report = check_zp_spin(*a.d0, *a.inv_dim);
    } else if (name == "ten-eighths-equivariant") {
        if (a.p <= 0)
            throw std::invalid_argument("pass -p <prime>");
        auto rep = [&](const std::vector<long long>& m, const char* what) {
            if (m.size() != static_cast<size_t>(a.p))
                throw std::invalid_argument(std::string(what) + " needs " +
                                            std::to_string(a.p) + " multiplicities");
            std::vector<Int> mult;
            mult.reserve(m.size());
            for (long long x : m)
                mult.push_back(to_int(x));
            return ZpVirtualRep(a.p, std::move(mult));
        };
        report = check_ten_eighths_equivariant(a.p, rep(a.hplus, "--hplus"), rep(a.v, "--v"),
                                               rep(a.vp, "--vp"));
    } else {
        throw std::invalid_argument("pass --json <file> for checker " + name);
    }
    print_json(report.to_json());
    return report_exit_code(report);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact smoothness obstructions for 4-manifold families and cyclic actions"};
    app.require_subcommand(1);

    // invariants ------------------------------------------------------------
    std::string inv_lattice;
    std::optional<long long> inv_c2;
    bool inv_spin = false;
    auto* invariants = app.add_subcommand("invariants", "Intersection-form invariants");
    invariants->add_option("--lattice", inv_lattice, "block sum, e.g. 3H+2E8m")->required();
    invariants->add_option("--c2", inv_c2, "c^2 of the characteristic element");
    invariants->add_flag("--spin", inv_spin, "spin structure (c = 0)");

    // check -----------------------------------------------------------------
    auto* check = app.add_subcommand("check", "Run one obstruction checker");
    check->require_subcommand(1);
    static const std::vector<std::string> checker_names = {
        "donaldson", "furuta",  "family-euler", "spin-family",
        "z2",        "even-involution", "zp",   "zp-spin",
        "ten-eighths-equivariant"};
    CheckArgs args;
    std::string picked_checker;
    for (const auto& name : checker_names) {
        auto* sub = check->add_subcommand(name);
        sub->callback([&picked_checker, name] { picked_checker = name; });
        sub->add_option("--json", args.json_path, "hypothesis JSON file ('-' for stdin)");
        sub->add_option("--lattice", args.lattice);
        sub->add_option("--c2", args.c2);
        sub->add_flag("--spin", args.spin);
        if (name == "furuta")
            sub->add_option("--b-plus", args.b_plus);
        if (name == "even-involution") {
            sub->add_option("--sigma", args.sigma);
            sub->add_option("--type", args.type);
        }
        if (name == "zp-spin")
            sub->add_option("--d0", args.d0);
        if (name == "z2") {
            sub->add_option("--d-plus", args.d_plus);
            sub->add_option("--d-minus", args.d_minus);
        }
        if (name == "z2" || name == "zp" || name == "even-involution" || name == "zp-spin")
            sub->add_option("--inv-dim", args.inv_dim);
        if (name == "zp" || name == "ten-eighths-equivariant")
            sub->add_option("-p,--p", args.p);
        if (name == "zp" || name == "z2") {
            sub->add_option("--d", args.d)->delimiter(',');
            sub->add_option("--h-dims", args.h)->delimiter(',');
        }
        if (name == "ten-eighths-equivariant") {
            sub->add_option("--hplus", args.hplus)->delimiter(',');
            sub->add_option("--v", args.v)->delimiter(',');
            sub->add_option("--vp", args.vp)->delimiter(',');
        }
    }

    // scenario ----------------------------------------------------------------
    auto* scenario = app.add_subcommand("scenario", "Generate and check a worked construction");
    scenario->require_subcommand(1);
    long long sc_p = 3, sc_g = 0, sc_a = 0, sc_b = 0;
    bool sc_trivial = false;
    auto* branched = scenario->add_subcommand("branched-cover");
    branched->add_option("-p,--p", sc_p)->required();
    branched->add_option("-g,--g", sc_g)->required();
    branched->add_option("-b,--b", sc_b)->required();
    auto* spin_fam = scenario->add_subcommand("spin-family");
    spin_fam->add_option("-a,--a", sc_a)->required();
    spin_fam->add_option("-b,--b", sc_b)->required();
    auto* nonspin_fam = scenario->add_subcommand("nonspin-family");
    nonspin_fam->add_option("-a,--a", sc_a)->required();
    nonspin_fam->add_option("-b,--b", sc_b)->required();
    nonspin_fam->add_flag("--trivial-bundle", sc_trivial,
                          "override: trivialize the H+ bundle (sanity check)");

    // catalog -----------------------------------------------------------------
    bool catalog_json = false;
    auto* catalog = app.add_subcommand("catalog", "Reproduce every named example and grid");
    catalog->add_flag("--json", catalog_json, "emit the rows as JSON");

    CLI11_PARSE(app, argc, argv);

    try {
        if (invariants->parsed()) {
            auto L = IntersectionLattice::parse(inv_lattice);
            auto inv = lattice_invariants(L);
            Json j{{"lattice", L.str()},      {"rank", inv.rank},
                   {"signature", inv.signature}, {"b_plus", inv.b_plus},
                   {"b_minus", inv.b_minus},  {"even", inv.even}};
            if (inv_c2 || inv_spin) {
                auto s = spinc_from_flags(inv_c2, inv_spin);
                j["d"] = json_int(dirac_index(L, s));
                j["spin"] = s.is_spin;
                if (!s.is_spin)
                    j["c2"] = json_int(s.c_squared);
            }
            print_json(j);
            return kExitOk;
        }
        if (check->parsed())
            return run_check(picked_checker, args);
        if (scenario->parsed()) {
            Scenario s;
            if (branched->parsed())
                s = scenario_branched_cover(static_cast<long>(sc_p), sc_g, sc_b);
            else if (spin_fam->parsed())
                s = scenario_spin_family(sc_a, sc_b);
            else
                s = scenario_nonspin_family(sc_a, sc_b, sc_trivial);
            print_json(s.to_json());
            return report_exit_code(s.report);
        }
        if (catalog->parsed()) {
            auto rows = run_catalog();
            long long bad = 0;
            for (const auto& r : rows)
                if (!r.ok)
                    ++bad;
            if (catalog_json) {
                Json j = Json::array();
                for (const auto& r : rows)
                    j.push_back(Json{{"id", r.id},
                                     {"expected", r.expected},
                                     {"actual", r.actual},
                                     {"ok", r.ok}});
                print_json(Json{{"rows", j}, {"mismatches", bad}});
            } else {
                std::cout << catalog_table(rows);
            }
            return bad == 0 ? kExitOk : kExitMismatch;
        }
    } catch (const ParseError& e) {
        print_json(Json{{"error", e.what()}, {"position", e.position()}});
        return kExitInputError;
    } catch (const std::exception& e) {
        print_json(Json{{"error", e.what()}});
        return kExitInputError;
    }
    return kExitInputError;
}
