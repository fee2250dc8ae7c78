#include "monopole/scenario.hpp"

#include <map>
#include <random>
#include <sstream>

#include "monopole/json_io.hpp"

namespace monopole {

Json Scenario::to_json() const
{
    Json j;
    j["id"] = id;
    j["description"] = description;
    j["check"] = check_name;
    j["hypothesis"] = hypothesis;
    j["report"] = report.to_json();
    if (!flags.empty())
        j["flags"] = flags;
    if (!extras.empty())
        j["extras"] = extras;
    return j;
}

namespace {

Json invariants_json(const IntersectionLattice& L, const SpinCData& s)
{
    auto inv = lattice_invariants(L);
    return Json{{"lattice", L.str()},      {"rank", inv.rank},       {"signature", inv.signature},
                {"b_plus", inv.b_plus},    {"b_minus", inv.b_minus}, {"even", inv.even},
                {"d", json_int(dirac_index(L, s))}};
}

}  // namespace

Scenario scenario_branched_cover(long p, long long g, long long b)
{
    if (!is_prime(p) || p == 2)
        throw std::invalid_argument("p must be an odd prime");
    if (b < 1)
        throw std::invalid_argument("the branched-cover construction needs b >= 1");
    if (g < 0)
        throw std::invalid_argument("g must be nonnegative");

    ZpActionHypothesis h;
    h.p = p;
    h.lattice = IntersectionLattice::single(Block::H, g * (p - 1))
                    .connected_sum(IntersectionLattice::single(Block::E8Minus, 2 * b * p));
    h.spinc = SpinCData::spin();
    h.index.p = p;
    h.index.d.assign(static_cast<size_t>(p), 0);
    h.index.d[0] = 2 * b * p;
    h.invariant_dim = 0;
    h.eigen_dims.assign(static_cast<size_t>(p), g);
    h.eigen_dims[0] = 0;

    Scenario s;
    s.id = "branched-cover-p" + std::to_string(p) + "-g" + std::to_string(g) + "-b" +
           std::to_string(b);
    s.description = "Order-" + std::to_string(p) + " isometry of " + h.lattice.str() +
                    " induced by a cyclic branched cover; locally linear but not smoothable.";
    s.check_name = "zp";
    s.hypothesis = zp_action_to_json(h);
    s.report = check_zp_action(h);

    const long long hyperbolic = g * (p - 1);
    const long long bound = 3 * b * p;
    s.flags = Json{{"locally_linear_realizable", true},
                   {"smooth_structure_exists", hyperbolic >= bound},
                   {"wall_realizable", hyperbolic > bound}};
    s.extras = Json{{"invariants", invariants_json(h.lattice, h.spinc)}};
    if (hyperbolic >= bound)
        s.extras["alternate_smooth_structure"] =
            Json{{"s2xs2_summands", hyperbolic - bound}, {"k3_summands", p * b}};
    return s;
}

Scenario scenario_spin_family(long long a, long long b)
{
    if (a < 3)
        throw std::invalid_argument("spin fibres need a = b+ >= 3 (10/8 bound)");
    if (b < 1)
        throw std::invalid_argument("the spin family construction needs b >= 1");

    FamilyHypothesis h;
    h.lattice = IntersectionLattice::single(Block::H, a)
                    .connected_sum(IntersectionLattice::single(Block::E8Minus, 2 * b));
    h.spinc = SpinCData::spin();
    std::vector<std::vector<int>> lines;
    for (int i = 0; i < a - 2; ++i)
        lines.push_back({i});
    h.hplus = FlatBundleDescriptor::over_torus(static_cast<int>(a - 2), std::move(lines), 2);
    h.spin_family = true;

    Scenario s;
    s.id = "spin-family-a" + std::to_string(a) + "-b" + std::to_string(b);
    s.description = "Mapping-torus family over T^" + std::to_string(a - 2) +
                    " with spin fibre " + h.lattice.str() + "; each circle factor flips one "
                    "hyperbolic summand of H+.";
    s.check_name = "spin-family";
    s.hypothesis = family_to_json(h);
    s.report = check_spin_family_pin(h);

    const long long min_b = std::min(h.lattice.b_plus(), h.lattice.b_minus());
    s.extras = Json{{"invariants", invariants_json(h.lattice, h.spinc)},
                    {"torus_dim", a - 2},
                    {"torus_dim_formula", "min(b_plus, b_minus) - 2"},
                    {"min_b", min_b}};
    if (s.report.obstructed())
        s.extras["narrative"] =
            "pi_j(Diff(X)) -> pi_j(Homeo(X)) fails to be an isomorphism for some j <= " +
            std::to_string(min_b - 3) + " = min(b_plus, b_minus) - 3; Diff(X) -> Homeo(X) is "
            "not a weak homotopy equivalence.";
    return s;
}

Scenario scenario_nonspin_family(long long a, long long b, bool trivialize_bundle)
{
    if (a < 1)
        throw std::invalid_argument("the non-spin family construction needs a >= 1");
    if (b < 0)
        throw std::invalid_argument("b must be nonnegative");

    FamilyHypothesis h;
    h.lattice = IntersectionLattice::single(Block::H, a)
                    .add(Block::E8Minus, 1)
                    .add(Block::DiagMinus, b + 1);
    h.spinc = SpinCData::with_c_squared(to_int(-(b + 1)));
    if (trivialize_bundle) {
        h.hplus = FlatBundleDescriptor::over_torus(static_cast<int>(a), {}, a);
    } else {
        std::vector<std::vector<int>> lines;
        for (int i = 0; i < a; ++i)
            lines.push_back({i});
        h.hplus = FlatBundleDescriptor::over_torus(static_cast<int>(a), std::move(lines), 0);
    }

    Scenario s;
    s.id = "nonspin-family-a" + std::to_string(a) + "-b" + std::to_string(b);
    s.description = "Mapping-torus family over T^" + std::to_string(a) + " with non-spin fibre " +
                    h.lattice.str() + " (one diagonal summand is the fake projective plane); "
                    "c^2 = " + std::to_string(-(b + 1)) + ".";
    s.check_name = "family-euler";
    s.hypothesis = family_to_json(h);
    s.report = check_family_euler(h);

    const long long min_b = std::min(h.lattice.b_plus(), h.lattice.b_minus());
    s.extras = Json{{"invariants", invariants_json(h.lattice, h.spinc)},
                    {"torus_dim", a},
                    {"torus_dim_formula", "min(b_plus, b_minus)"},
                    {"min_b", min_b},
                    {"fake_projective_summand", true},
                    {"bundle_trivialized", trivialize_bundle}};
    if (s.report.obstructed())
        s.extras["narrative"] =
            "pi_j(Diff(X)) -> pi_j(Homeo(X)) fails to be an isomorphism for some j <= " +
            std::to_string(min_b - 1) + " = min(b_plus, b_minus) - 1; Diff(X) -> Homeo(X) is "
            "not a weak homotopy equivalence.";
    return s;
}

GridSummary z2_oracle_grid(long long d_range, long long b_plus_max)
{
    GridSummary s;
    for (long long dp = -d_range; dp <= d_range; ++dp)
        for (long long dm = -d_range; dm <= d_range; ++dm)
            for (long long bp = 0; bp <= b_plus_max; ++bp) {
                bool closed_form = dp <= 0 && dm <= 0;
                bool poly = is_polynomial(z2_divisibility_instance(bp, dp, dm)).polynomial;
                ++s.cases;
                if (poly != closed_form)
                    ++s.mismatches;
            }
    return s;
}

GridSummary zp_oracle_grid(long p, long long d_bound, long long h_bound)
{
    GridSummary s;
    const long half = (p - 1) / 2;
    std::vector<long long> h(static_cast<size_t>(p), 0);
    std::vector<long long> h_half(static_cast<size_t>(half), 0);
    // The instance only depends on h and the sums d_j + d_{p-j}; memoize on
    // those to keep the exhaustive sweep quick.
    std::map<std::vector<long long>, bool> memo;

    while (true) {
        for (long j = 1; j <= half; ++j) {
            h[static_cast<size_t>(j)] = h_half[static_cast<size_t>(j - 1)];
            h[static_cast<size_t>(p - j)] = h_half[static_cast<size_t>(j - 1)];
        }
        std::vector<long long> d(static_cast<size_t>(p), -d_bound);
        while (true) {
            std::vector<long long> key = h_half;
            key.push_back(d[0]);
            bool sign_ok = d[0] <= 0;
            for (long j = 1; j <= half; ++j) {
                long long sj = d[static_cast<size_t>(j)] + d[static_cast<size_t>(p - j)];
                key.push_back(sj);
                if (sj > 0)
                    sign_ok = false;
            }
            bool poly;
            auto it = memo.find(key);
            if (it != memo.end()) {
                poly = it->second;
            } else {
                poly = is_polynomial(zp_divisibility_instance(p, d, h)).polynomial;
                memo.emplace(std::move(key), poly);
            }
            ++s.cases;
            if (poly != sign_ok)
                ++s.mismatches;

            size_t i = 0;
            while (i < d.size() && ++d[i] > d_bound) {
                d[i] = -d_bound;
                ++i;
            }
            if (i == d.size())
                break;
        }
        size_t i = 0;
        while (i < h_half.size() && ++h_half[i] > h_bound) {
            h_half[i] = 0;
            ++i;
        }
        if (h_half.empty() || i == h_half.size())
            break;
    }
    return s;
}

GridSummary even_involution_pipeline_grid(long long b_plus_max)
{
    GridSummary s;
    for (long long b_plus = 0; b_plus <= b_plus_max; ++b_plus)
        for (long long u = 0; u <= b_plus; ++u) {
            FamilyHypothesis h;
            h.lattice = IntersectionLattice::single(Block::H, b_plus).add(Block::E8Minus, 2);
            h.spinc = SpinCData::spin();
            h.hplus = FlatBundleDescriptor::over_projective(static_cast<int>(b_plus), u,
                                                            b_plus - u);
            h.spin_family = true;
            bool pipeline = check_spin_family_pin(h).obstructed();
            bool closed_form = check_even_involution(-16, u, InvolutionType::Even).obstructed();
            ++s.cases;
            if (pipeline != closed_form)
                ++s.mismatches;
        }
    return s;
}

GridSummary furuta_sweep(const std::vector<long long>& sigmas, long long b_plus_max)
{
    GridSummary s;
    for (long long sigma : sigmas) {
        const long long d = -sigma / 8;
        for (long long bp = 0; bp <= b_plus_max; ++bp) {
            auto L = IntersectionLattice::single(Block::H, bp).add(Block::E8Minus, -sigma / 8);
            bool expect = bp >= 1 ? bp < d + 1 : d > 0;
            ++s.cases;
            if (check_furuta_point(L).obstructed() != expect)
                ++s.mismatches;
        }
    }
    return s;
}

namespace {

void enumerate_monomials(const RingPresentation& pres, int degree, std::vector<int>& cur,
                         size_t idx, std::vector<std::vector<int>>& out)
{
    if (idx == pres.arity()) {
        if (degree == 0)
            out.push_back(cur);
        return;
    }
    const auto& g = pres.gens()[idx];
    int max_e = g.degree > 0 ? degree / g.degree : 0;
    if (g.nilpotency > 0)
        max_e = std::min(max_e, g.nilpotency - 1);
    for (int e = 0; e <= max_e; ++e) {
        cur[idx] = e;
        enumerate_monomials(pres, degree - e * g.degree, cur, idx + 1, out);
    }
    cur[idx] = 0;
}

GradedClass random_homogeneous(std::mt19937_64& rng, const PresentationPtr& pres, int degree)
{
    std::vector<int> cur(pres->arity(), 0);
    std::vector<std::vector<int>> monos;
    enumerate_monomials(*pres, degree, cur, 0, monos);
    std::uniform_int_distribution<long> coeff(-4, 4);
    GradedClass r(pres);
    for (const auto& m : monos)
        r += GradedClass::monomial(pres, m, Int(coeff(rng)));
    return r;
}

ZpVirtualRep random_rep(std::mt19937_64& rng, long p, long lo, long hi)
{
    std::uniform_int_distribution<long> dist(lo, hi);
    ZpVirtualRep r(p);
    for (long j = 0; j < p; ++j)
        r += ZpVirtualRep::character(p, j, Int(dist(rng)));
    return r;
}

}  // namespace

GridSummary identity_suite(int chern_trials)
{
    GridSummary s;
    std::mt19937_64 rng(0x5eedULL);
    auto tally = [&s](bool ok) {
        ++s.cases;
        if (!ok)
            ++s.mismatches;
    };

    // c(V) s(V) = 1 on randomized Chern inputs.
    std::uniform_int_distribution<int> ngen(1, 3), nilp(2, 6), rank_d(0, 3);
    for (int trial = 0; trial < chern_trials; ++trial) {
        std::vector<RingGenerator> gens;
        int n = ngen(rng);
        for (int i = 0; i < n; ++i)
            gens.push_back({"g" + std::to_string(i + 1), 2, nilp(rng), 0});
        auto pres = make_presentation(0, std::move(gens));
        int rank = rank_d(rng);
        int length = rank + static_cast<int>(rng() % 4);
        std::vector<GradedClass> chern;
        chern.push_back(GradedClass::scalar(pres, 1));
        for (int j = 1; j <= rank; ++j)
            chern.push_back(random_homogeneous(rng, pres, 2 * j));
        auto segre = total_segre(chern, length);
        GradedClass ct(pres), st(pres);
        for (const auto& c : chern)
            ct += c;
        for (const auto& x : segre)
            st += x;
        GradedClass prod = ct * st;
        bool ok = prod.component(0).is_one();
        for (int k = 1; k <= length; ++k)
            ok = ok && prod.component(2 * k).is_zero();
        tally(ok);
    }

    // Whitney multiplicativity of sw_total over torus bases.
    std::uniform_int_distribution<int> tdim(1, 4), nlines(0, 3), bit(0, 1), triv(0, 2);
    for (int trial = 0; trial < 50; ++trial) {
        int n = tdim(rng);
        auto rand_lines = [&](int count) {
            std::vector<std::vector<int>> lines;
            for (int i = 0; i < count; ++i) {
                std::vector<int> line;
                for (int g = 0; g < n; ++g)
                    if (bit(rng))
                        line.push_back(g);
                lines.push_back(line);
            }
            return lines;
        };
        auto la = rand_lines(nlines(rng));
        auto lb = rand_lines(nlines(rng));
        long long ua = triv(rng), ub = triv(rng);
        auto a = FlatBundleDescriptor::over_torus(n, la, ua);
        auto b = FlatBundleDescriptor::over_torus(n, lb, ub);
        auto ab_lines = la;
        ab_lines.insert(ab_lines.end(), lb.begin(), lb.end());
        auto ab = FlatBundleDescriptor::over_torus(n, ab_lines, ua + ub);
        tally(sw_total(ab) == sw_total(a) * sw_total(b));
    }

    // tr_k(psi2 r) = tr_{2k}(r).
    for (long p : {2L, 3L, 5L, 7L})
        for (int trial = 0; trial < 20; ++trial) {
            auto r = random_rep(rng, p, -3, 3);
            bool ok = true;
            for (long k = 0; k < p; ++k)
                ok = ok && character_at(psi2(r), k) == character_at(r, mod_reduce(2 * k, p));
            tally(ok);
        }

    // lambda_total(r + s) = lambda_total(r) lambda_total(s).
    for (long p : {2L, 3L, 5L})
        for (int trial = 0; trial < 20; ++trial) {
            auto r = random_rep(rng, p, 0, 3);
            auto t = random_rep(rng, p, 0, 3);
            tally(lambda_total(r + t) == lambda_total(r) * lambda_total(t));
        }

    // mu_a mu_b = mu_{a+b} + mu_{|a-b|} with mu_0 = 1 + 1_-.
    auto mu0 = Pin2Element::one() + Pin2Element::sign_rep();
    for (long a = 1; a <= 8; ++a)
        for (long b = 1; b <= 8; ++b) {
            auto rhs = Pin2Element::mu(a + b) +
                       (a == b ? mu0 : Pin2Element::mu(a > b ? a - b : b - a));
            tally(Pin2Element::mu(a) * Pin2Element::mu(b) == rhs);
        }

    // prod_{j=1}^{p-1} (1 - w^j) = p.
    for (long p : {3L, 5L, 7L}) {
        CycInteger prod(p, 1);
        for (long j = 1; j < p; ++j)
            prod *= CycInteger(p, 1) - CycInteger::omega_power(p, j);
        tally(prod == CycInteger(p, p));
    }

    return s;
}

namespace {

std::string verdict_with_d(const ObstructionReport& r, const Int& d)
{
    return verdict_name(r.verdict) + " d=" + d.get_str();
}

std::string summary_str(const GridSummary& s)
{
    return std::to_string(s.cases) + " cases, " + std::to_string(s.mismatches) + " mismatches";
}

std::string flags_str(const Json& flags, const Int& d, const std::string& verdict)
{
    std::ostringstream os;
    os << verdict << " d=" << d.get_str()
       << " ll=" << (flags.at("locally_linear_realizable").get<bool>() ? 1 : 0)
       << " smooth=" << (flags.at("smooth_structure_exists").get<bool>() ? 1 : 0)
       << " wall=" << (flags.at("wall_realizable").get<bool>() ? 1 : 0);
    return os.str();
}

}  // namespace

std::vector<CatalogRow> run_catalog()
{
    std::vector<CatalogRow> rows;
    auto add = [&rows](std::string id, std::string expected, std::string actual) {
        bool ok = expected == actual;
        rows.push_back({std::move(id), std::move(expected), std::move(actual), ok});
    };

    {
        auto L = IntersectionLattice::parse("E8m");
        auto r = check_point_donaldson(L, SpinCData::spin());
        add("donaldson-e8m", "obstructed d=1", verdict_with_d(r, dirac_index(L, SpinCData::spin())));
    }
    {
        auto L = IntersectionLattice::parse("8D1m");
        auto s = SpinCData::with_c_squared(Int(-8));
        add("donaldson-diagonal", "consistent d=0", verdict_with_d(check_point_donaldson(L, s),
                                                                   dirac_index(L, s)));
    }
    {
        add("furuta-2h2e8m", "obstructed",
            verdict_name(check_furuta_point(IntersectionLattice::parse("2H+2E8m")).verdict));
        add("furuta-k3", "consistent",
            verdict_name(check_furuta_point(IntersectionLattice::parse("3H+2E8m")).verdict));
        add("furuta-sweep", "39 cases, 0 mismatches",
            summary_str(furuta_sweep({-16, -32, -48}, 12)));
    }
    {
        add("even-involution-invdim2", "obstructed",
            verdict_name(check_even_involution(-16, 2, InvolutionType::Even).verdict));
        add("even-involution-invdim3", "consistent",
            verdict_name(check_even_involution(-16, 3, InvolutionType::Even).verdict));
        add("even-involution-pipeline", "496 cases, 0 mismatches",
            summary_str(even_involution_pipeline_grid(30)));
    }
    {
        auto s = scenario_branched_cover(3, 5, 1);
        add("branched-cover-p3-g5-b1", "obstructed d=6 ll=1 smooth=1 wall=1",
            flags_str(s.flags, int_from_json(s.extras.at("invariants").at("d")),
                      verdict_name(s.report.verdict)));
        auto s2 = scenario_branched_cover(5, 12, 1);
        add("branched-cover-p5-g12-b1", "obstructed d=10 ll=1 smooth=1 wall=1",
            flags_str(s2.flags, int_from_json(s2.extras.at("invariants").at("d")),
                      verdict_name(s2.report.verdict)));
    }
    {
        auto s = scenario_spin_family(3, 1);
        std::ostringstream actual;
        actual << verdict_name(s.report.verdict) << " w_index="
               << s.report.witness.at("nonzero_w_indices")[0].get<long long>()
               << " torus_dim=" << s.extras.at("torus_dim").get<long long>();
        add("spin-family-a3-b1", "obstructed w_index=1 torus_dim=1", actual.str());
    }
    {
        auto s = scenario_nonspin_family(1, 0);
        std::ostringstream actual;
        actual << verdict_name(s.report.verdict) << " w_degree="
               << s.report.witness.at("nonzero_class").at("degree").get<long long>()
               << " torus_dim=" << s.extras.at("torus_dim").get<long long>();
        add("nonspin-family-a1-b0", "obstructed w_degree=1 torus_dim=1", actual.str());
    }
    add("z2-oracle-grid", "1521 cases, 0 mismatches", summary_str(z2_oracle_grid(6, 8)));
    add("zp-oracle-grid-p3", "1372 cases, 0 mismatches", summary_str(zp_oracle_grid(3, 3, 3)));
    add("zp-oracle-grid-p5", "268912 cases, 0 mismatches", summary_str(zp_oracle_grid(5, 3, 3)));
    {
        auto s = identity_suite(200);
        add("identity-suites", std::to_string(s.cases) + " cases, 0 mismatches",
            summary_str(s));
    }
    return rows;
}

std::string catalog_table(const std::vector<CatalogRow>& rows)
{
    std::ostringstream os;
    size_t idw = 12, expw = 10;
    for (const auto& r : rows) {
        idw = std::max(idw, r.id.size());
        expw = std::max(expw, std::max(r.expected.size(), r.actual.size()));
    }
    auto pad = [](const std::string& s, size_t w) {
        std::string out = s;
        out.resize(w, ' ');
        return out;
    };
    os << pad("scenario", idw) << "  " << pad("expected", expw) << "  " << pad("actual", expw)
       << "  status\n";
    os << std::string(idw + 2 * expw + 12, '-') << "\n";
    long long bad = 0;
    for (const auto& r : rows) {
        os << pad(r.id, idw) << "  " << pad(r.expected, expw) << "  " << pad(r.actual, expw)
           << "  " << (r.ok ? "ok" : "MISMATCH") << "\n";
        if (!r.ok)
            ++bad;
    }
    os << std::string(idw + 2 * expw + 12, '-') << "\n";
    os << rows.size() << " scenarios, " << bad << " mismatches\n";
    return os.str();
}

}  // namespace monopole
