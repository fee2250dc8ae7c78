#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "monopole/json_io.hpp"
#include "monopole/obstruction.hpp"
#include "test_util.hpp"

using namespace monopole;
using monopole::testing::rand_in;

namespace {

IntersectionLattice lat(const std::string& s)
{
    return IntersectionLattice::parse(s);
}

// Z/2 hypothesis with prescribed b+, d_+ and d_-: lattice b+ H + E8m with the
// characteristic chosen so the index comes out right, H+ fully anti-invariant.
ZpActionHypothesis z2_hypothesis(long long b_plus, long long d_plus, long long d_minus)
{
    ZpActionHypothesis h;
    h.p = 2;
    h.lattice = IntersectionLattice::single(Block::H, b_plus).add(Block::E8Minus, 1);
    h.spinc = SpinCData::with_c_squared(to_int(8 * (d_plus + d_minus) - 8));
    h.index = {2, {d_plus, d_minus}};
    h.invariant_dim = 0;
    h.eigen_dims = {0, b_plus};
    return h;
}

ZpActionHypothesis zp_hypothesis(long p, const std::vector<long long>& d,
                                 const std::vector<long long>& h_dims)
{
    long long total_d = 0;
    for (long long x : d)
        total_d += x;
    long long b_plus = 0;
    for (long long x : h_dims)
        b_plus += x;
    ZpActionHypothesis h;
    h.p = p;
    h.lattice = IntersectionLattice::single(Block::H, b_plus).add(Block::E8Minus, 1);
    h.spinc = SpinCData::with_c_squared(to_int(8 * total_d - 8));
    h.index = {p, d};
    h.invariant_dim = h_dims[0];
    h.eigen_dims = h_dims;
    return h;
}

}  // namespace

TEST_CASE("donaldson point checker")
{
    auto r1 = check_point_donaldson(lat("E8m"), SpinCData::spin());
    CHECK(r1.verdict == Verdict::Obstructed);
    CHECK(r1.witness.at("d") == 1);

    auto r2 = check_point_donaldson(lat("8D1m"), SpinCData::with_c_squared(Int(-8)));
    CHECK(r2.verdict == Verdict::Consistent);

    auto r3 = check_point_donaldson(lat("2H+2E8m"), SpinCData::spin());
    CHECK(r3.verdict == Verdict::NotApplicable);

    CHECK_THROWS_AS(check_point_donaldson(lat("E8m"), SpinCData::with_c_squared(Int(1))),
                    std::invalid_argument);
}

TEST_CASE("family euler checker")
{
    // Non-spin mapping-torus scenario shape, a = b+ = 1: base T^1, one line.
    FamilyHypothesis h;
    h.lattice = lat("H+E8m+1D1m");
    h.spinc = SpinCData::with_c_squared(Int(-1));
    h.hplus = FlatBundleDescriptor::over_torus(1, {{0}}, 0);
    auto r = check_family_euler(h);
    CHECK(r.verdict == Verdict::Obstructed);
    CHECK(r.witness.at("d") == 1);
    CHECK(r.witness.at("nonzero_class").at("degree") == 1);

    // Fully trivial bundle: the Euler-class test is silent.
    FamilyHypothesis ht = h;
    ht.hplus = FlatBundleDescriptor::over_torus(1, {}, 1);
    CHECK(check_family_euler(ht).verdict == Verdict::Consistent);

    // b+ = 0 delegates to the point checker.
    FamilyHypothesis h0;
    h0.lattice = lat("E8m");
    h0.spinc = SpinCData::spin();
    h0.hplus = FlatBundleDescriptor::over_point(0);
    auto r0 = check_family_euler(h0);
    CHECK(r0.theorem == "donaldson");
    CHECK(r0.verdict == Verdict::Obstructed);

    // Rank mismatch is an input error.
    FamilyHypothesis bad = h;
    bad.hplus = FlatBundleDescriptor::over_torus(1, {{0}}, 3);
    CHECK_THROWS_AS(check_family_euler(bad), std::invalid_argument);
}

TEST_CASE("family euler segre clause")
{
    // d = -1; supplied s_2 (j = 2 > -d = 1) with nonzero product kills it.
    FamilyHypothesis h;
    h.lattice = lat("2H+E8m+1D1m");  // b+ = 2, sigma = -9
    h.spinc = SpinCData::with_c_squared(Int(-17));
    REQUIRE(dirac_index(h.lattice, h.spinc) == -1);
    h.hplus = FlatBundleDescriptor::over_torus(4, {{0}, {1}}, 0);
    auto ring = base_mod2_ring(h.hplus.base);

    // s_1 in degree 2 with w_2 * s_1 = t1 t2 t3 t4 != 0; but j = 1 <= -d, so
    // it may be nonzero without contradiction.
    GradedClass s1 = GradedClass::generator(ring, 2) * GradedClass::generator(ring, 3);
    h.segre = {s1};
    CHECK(check_family_euler(h).verdict == Verdict::Consistent);

    // The same class at position j = 2 violates e(H+) s_j(D) = 0.
    h.segre = {GradedClass(ring), s1};
    auto r = check_family_euler(h);
    CHECK(r.verdict == Verdict::Obstructed);
    CHECK(r.witness.at("segre_index") == 2);
}

TEST_CASE("spin family pin checker")
{
    // Spin mapping-torus shape: a H + 2b E8m over T^{a-2}.
    for (long long a : {3LL, 4LL}) {
        FamilyHypothesis h;
        h.lattice = IntersectionLattice::single(Block::H, a).add(Block::E8Minus, 2);
        h.spinc = SpinCData::spin();
        std::vector<std::vector<int>> lines;
        for (int i = 0; i < a - 2; ++i)
            lines.push_back({i});
        h.hplus = FlatBundleDescriptor::over_torus(static_cast<int>(a - 2), lines, 2);
        h.spin_family = true;
        auto r = check_spin_family_pin(h);
        CHECK(r.verdict == Verdict::Obstructed);
        CHECK(r.witness.at("d") == 2);
        CHECK(r.witness.at("nonzero_w_indices") == Json::array({a - 2}));
    }

    // Point base, b+ = 0 (E8m): the rank-0 window contains w_0 = 1.
    FamilyHypothesis h0;
    h0.lattice = lat("E8m");
    h0.spinc = SpinCData::spin();
    h0.hplus = FlatBundleDescriptor::over_point(0);
    h0.spin_family = true;
    auto r0 = check_spin_family_pin(h0);
    CHECK(r0.verdict == Verdict::Obstructed);
    CHECK(r0.witness.at("nonzero_w_indices") == Json::array({0}));

    // RP(b+) with v = b+, u = 0 and sigma < 0.
    FamilyHypothesis hr;
    hr.lattice = lat("2H+2E8m");
    hr.spinc = SpinCData::spin();
    hr.hplus = FlatBundleDescriptor::over_projective(2, 0, 2);
    hr.spin_family = true;
    auto rr = check_spin_family_pin(hr);
    CHECK(rr.verdict == Verdict::Obstructed);

    // Non-spin input is out of scope for this checker.
    hr.spin_family = false;
    hr.spinc = SpinCData::with_c_squared(Int(0));
    CHECK(check_spin_family_pin(hr).verdict == Verdict::NotApplicable);

    // Trivial H+ bundle with b+ >= 3: consistent.
    FamilyHypothesis hc;
    hc.lattice = lat("3H+2E8m");
    hc.spinc = SpinCData::spin();
    hc.hplus = FlatBundleDescriptor::over_torus(2, {}, 3);
    hc.spin_family = true;
    CHECK(check_spin_family_pin(hc).verdict == Verdict::Consistent);
}

TEST_CASE("furuta point checker")
{
    CHECK(check_furuta_point(lat("3H+2E8m")).verdict == Verdict::Consistent);  // K3
    auto r = check_furuta_point(lat("2H+2E8m"));
    CHECK(r.verdict == Verdict::Obstructed);
    CHECK(r.witness.at("b_plus") == 2);
    CHECK(r.witness.at("d") == 2);

    auto r0 = check_furuta_point(lat("2E8m"));
    CHECK(r0.verdict == Verdict::Obstructed);

    CHECK(check_furuta_point(lat("3D1p+3D1m")).verdict == Verdict::NotApplicable);

    // sigma = -8: the quaternionic index is not an integer.
    auto ri = check_furuta_point(lat("E8m"));
    CHECK(ri.verdict == Verdict::Obstructed);
    CHECK(ri.witness.at("failure") == "index-integrality");

    // Positive signature never obstructs.
    CHECK(check_furuta_point(lat("2E8p")).verdict == Verdict::Consistent);
    CHECK(check_furuta_point(lat("4H")).verdict == Verdict::Consistent);

    // The boundary sweep from the acceptance gate.
    for (long long minus_e8 : {2LL, 4LL, 6LL}) {
        long long d = minus_e8;  // sigma = -8 * minus_e8
        for (long long bp = 0; bp <= 12; ++bp) {
            auto L = IntersectionLattice::single(Block::H, bp).add(Block::E8Minus, minus_e8);
            bool expect = bp >= 1 ? bp < d + 1 : d > 0;
            CHECK(check_furuta_point(L).obstructed() == expect);
        }
    }

    // Override sweeps b+ without changing the lattice.
    CHECK(check_furuta_point(lat("2E8m"), 5).verdict == Verdict::Consistent);
    CHECK(check_furuta_point(lat("2E8m"), 2).verdict == Verdict::Obstructed);
}

TEST_CASE("z2 action checker")
{
    auto h1 = z2_hypothesis(3, 1, -1);
    auto r1 = check_z2_action(h1);
    CHECK(r1.verdict == Verdict::Obstructed);
    CHECK(r1.witness.at("failing_signs") == Json::array({"+"}));
    CHECK(!r1.witness.at("certificate").at("polynomial").get<bool>());

    CHECK(check_z2_action(z2_hypothesis(2, 0, 0)).verdict == Verdict::Consistent);

    auto h3 = z2_hypothesis(3, 1, 0);
    h3.invariant_dim = 1;
    h3.eigen_dims = {1, 2};
    CHECK(check_z2_action(h3).verdict == Verdict::NotApplicable);
}

TEST_CASE("z2 verdict coincides with the laurent certificate")
{
    for (long long dp = -6; dp <= 6; ++dp)
        for (long long dm = -6; dm <= 6; ++dm)
            for (long long bp = 0; bp <= 8; ++bp) {
                auto inst = z2_divisibility_instance(bp, dp, dm);
                auto cert = is_polynomial(inst);
                bool closed_form = dp <= 0 && dm <= 0;
                CHECK(cert.polynomial == closed_form);
                if (!cert.polynomial) {
                    REQUIRE(cert.witness_root.has_value());
                    CHECK(*cert.witness_root == (dp > 0 ? 0 : 1));
                }
            }
}

TEST_CASE("even involution checker")
{
    auto r1 = check_even_involution(-16, 2, InvolutionType::Even);
    CHECK(r1.verdict == Verdict::Obstructed);
    // The family model pins the nonzero index at v = b+ - 2.
    auto inner = r1.witness.at("family_model");
    CHECK(inner.at("v") == 3);
    CHECK(inner.at("report").at("verdict") == "obstructed");

    CHECK(check_even_involution(-16, 3, InvolutionType::Even).verdict == Verdict::Consistent);
    CHECK(check_even_involution(8, 2, InvolutionType::Even).verdict == Verdict::NotApplicable);
    CHECK(check_even_involution(-16, 2, InvolutionType::Odd).verdict == Verdict::NotApplicable);
    CHECK_THROWS_AS(check_even_involution(-12, 2, InvolutionType::Even), std::invalid_argument);
}

TEST_CASE("even involution coincides with the projective family pipeline")
{
    for (long long b_plus = 0; b_plus <= 30; ++b_plus) {
        for (long long u = 0; u <= b_plus; ++u) {
            FamilyHypothesis h;
            h.lattice = IntersectionLattice::single(Block::H, b_plus).add(Block::E8Minus, 2);
            h.spinc = SpinCData::spin();
            h.hplus = FlatBundleDescriptor::over_projective(static_cast<int>(b_plus), u,
                                                            b_plus - u);
            h.spin_family = true;
            bool pipeline = check_spin_family_pin(h).obstructed();
            bool closed_form = u <= 2;
            CHECK(pipeline == closed_form);
        }
    }
}

TEST_CASE("zp action checker")
{
    auto h1 = zp_hypothesis(3, {6, 0, 0}, {0, 5, 5});
    auto r1 = check_zp_action(h1);
    CHECK(r1.verdict == Verdict::Obstructed);
    CHECK(r1.witness.at("j") == 0);
    CHECK(!r1.witness.at("certificate").at("polynomial").get<bool>());
    CHECK(r1.witness.at("certificate").at("witness_root") == 0);

    CHECK(check_zp_action(zp_hypothesis(3, {0, -1, -2}, {0, 2, 2})).verdict ==
          Verdict::Consistent);

    auto h3 = zp_hypothesis(3, {1, 0, 0}, {1, 2, 2});
    CHECK(check_zp_action(h3).verdict == Verdict::NotApplicable);

    CHECK(check_zp_action(z2_hypothesis(2, 1, 0)).verdict == Verdict::NotApplicable);

    // The compensated case: d_1 > 0 but d_1 + d_2 <= 0 still obstructs, via
    // the relabeled certificate.
    auto h4 = zp_hypothesis(3, {0, 1, -5}, {0, 2, 2});
    auto r4 = check_zp_action(h4);
    CHECK(r4.verdict == Verdict::Obstructed);
    CHECK(r4.witness.at("j") == 1);
    CHECK(!r4.witness.at("certificate").at("polynomial").get<bool>());
}

TEST_CASE("zp verdict coincides with the certificate under relabelings")
{
    // Exhaustive p=3 grid: some d_j > 0 iff some cyclic relabeling fails the
    // divisibility certificate.
    std::vector<long long> h3 = {0, 2, 2};
    for (long long d0 = -3; d0 <= 3; ++d0)
        for (long long d1 = -3; d1 <= 3; ++d1)
            for (long long d2 = -3; d2 <= 3; ++d2) {
                std::vector<long long> d = {d0, d1, d2};
                bool any_positive = d0 > 0 || d1 > 0 || d2 > 0;
                bool any_relabel_fails = false;
                for (long k = 0; k < 3; ++k) {
                    std::vector<long long> rel = {d[k], d[(1 + k) % 3], d[(2 + k) % 3]};
                    if (!is_polynomial(zp_divisibility_instance(3, rel, h3)).polynomial)
                        any_relabel_fails = true;
                }
                CHECK(any_positive == any_relabel_fails);
            }

    // Sampled p=5 grid with the same statement.
    std::vector<long long> h5 = {0, 1, 2, 2, 1};
    for (int trial = 0; trial < 150; ++trial) {
        std::vector<long long> d(5);
        for (auto& x : d)
            x = rand_in(-3, 3);
        bool any_positive = false;
        for (long long x : d)
            any_positive = any_positive || x > 0;
        bool any_relabel_fails = false;
        for (long k = 0; k < 5 && !any_relabel_fails; ++k) {
            std::vector<long long> rel(5);
            for (long m = 0; m < 5; ++m)
                rel[static_cast<size_t>(m)] = d[static_cast<size_t>((m + k) % 5)];
            if (!is_polynomial(zp_divisibility_instance(5, rel, h5)).polynomial)
                any_relabel_fails = true;
        }
        CHECK(any_positive == any_relabel_fails);
    }
}

TEST_CASE("zp spin checker")
{
    CHECK(check_zp_spin(3, 2).verdict == Verdict::Obstructed);
    CHECK(check_zp_spin(0, 1).verdict == Verdict::Consistent);
    CHECK(check_zp_spin(-2, 1).verdict == Verdict::Consistent);
    CHECK(check_zp_spin(3, 0).verdict == Verdict::NotApplicable);

    // Monotonicity: growing the invariant subspace never flips to obstructed.
    for (long long d0 = -3; d0 <= 5; ++d0) {
        bool prev_obstructed = true;
        for (long long inv = 1; inv <= 8; ++inv) {
            bool cur = check_zp_spin(d0, inv).obstructed();
            if (!prev_obstructed)
                CHECK(!cur);
            prev_obstructed = cur;
        }
    }
    for (long long sigma : {-16LL, -32LL}) {
        bool prev_obstructed = true;
        for (long long inv = 0; inv <= 8; ++inv) {
            bool cur = check_even_involution(sigma, inv, InvolutionType::Even).obstructed();
            if (!prev_obstructed)
                CHECK(!cur);
            prev_obstructed = cur;
        }
    }
}

TEST_CASE("ten eighths equivariant checker")
{
    // Degenerate all-trivial case reproduces b+ >= d + 1.
    for (long p : {2L, 3L}) {
        for (long long d : {2LL, 4LL}) {
            for (long long bp = 0; bp <= 8; ++bp) {
                auto hplus = ZpVirtualRep::trivial(p, to_int(bp));
                auto V = ZpVirtualRep::trivial(p, to_int(d));  // rank 2a = d
                auto Vp = ZpVirtualRep(p);
                auto r = check_ten_eighths_equivariant(p, hplus, V, Vp);
                bool expect_obstructed = bp >= 1 ? bp < d + 1 : d > 0;
                CHECK(r.obstructed() == expect_obstructed);
            }
        }
    }

    // b+ = 0 with V = V' is trivially consistent (eta = 1).
    auto V = ZpVirtualRep::character(3, 1) + ZpVirtualRep::character(3, 2);
    CHECK(check_ten_eighths_equivariant(3, ZpVirtualRep(3), V, V).verdict ==
          Verdict::Consistent);

    // p = 3 example: hplus = 2 C0, V = C1 + C2, V' = 0.
    auto r = check_ten_eighths_equivariant(3, ZpVirtualRep::trivial(3, 2), V, ZpVirtualRep(3));
    // A = 4, divisor = 2 * lambda(psi2 V) = 2 (1 + C2)(1 + C1); the character
    // at the generator is 4 vs 2, so divisibility fails there.
    CHECK(r.verdict == Verdict::Obstructed);
    CHECK(r.witness.at("refined") == true);

    // Domain errors.
    CHECK_THROWS_AS(check_ten_eighths_equivariant(3, ZpVirtualRep(3), V, -V), std::domain_error);
    CHECK_THROWS_AS(
        check_ten_eighths_equivariant(3, ZpVirtualRep(3), ZpVirtualRep::character(3, 1), V),
        std::domain_error);
    CHECK_THROWS_AS(check_ten_eighths_equivariant(3, ZpVirtualRep::character(3, 1) * Int(3),
                                                  V, V),
                    std::domain_error);
}

TEST_CASE("furuta coincides with the degenerate ten-eighths run")
{
    for (long long minus_e8 : {2LL, 4LL, 6LL}) {
        long long d = minus_e8;
        for (long long bp = 1; bp <= 12; ++bp) {
            auto L = IntersectionLattice::single(Block::H, bp).add(Block::E8Minus, minus_e8);
            auto furuta = check_furuta_point(L);
            auto ten = check_ten_eighths_equivariant(
                2, ZpVirtualRep::trivial(2, to_int(bp)), ZpVirtualRep::trivial(2, to_int(d)), ZpVirtualRep(2));
            CHECK(furuta.obstructed() == ten.obstructed());
        }
    }
}

TEST_CASE("soundness: obstructed witnesses re-evaluate")
{
    // zp: the reported j really has d_j > 0 and the certificate really fails.
    auto r = check_zp_action(zp_hypothesis(5, {-1, 2, 0, -3, 1}, {0, 1, 2, 2, 1}));
    REQUIRE(r.verdict == Verdict::Obstructed);
    long j = r.witness.at("j").get<long>();
    CHECK(r.inputs_echo.at("action").at("d")[static_cast<size_t>(j)].get<long long>() > 0);
    CHECK(!r.witness.at("certificate").at("polynomial").get<bool>());

    // z2: reported signs match the data.
    auto r2 = check_z2_action(z2_hypothesis(4, -2, 3));
    REQUIRE(r2.verdict == Verdict::Obstructed);
    CHECK(r2.witness.at("failing_signs") == Json::array({"-"}));
    CHECK(r2.witness.at("d_minus").get<long long>() > 0);

    // furuta: the violated inequality holds numerically.
    auto r3 = check_furuta_point(lat("2H+2E8m"));
    REQUIRE(r3.verdict == Verdict::Obstructed);
    CHECK(r3.witness.at("b_plus").get<long long>() < r3.witness.at("d").get<long long>() + 1);
}

TEST_CASE("hypothesis json round trip")
{
    auto h = zp_hypothesis(3, {6, 0, 0}, {0, 5, 5});
    auto j = zp_action_to_json(h);
    auto h2 = zp_action_from_json(j);
    CHECK(zp_action_to_json(h2) == j);
    CHECK(check_zp_action(h2).to_json() == check_zp_action(h).to_json());

    FamilyHypothesis f;
    f.lattice = lat("3H+2E8m");
    f.spinc = SpinCData::spin();
    f.hplus = FlatBundleDescriptor::over_torus(1, {{0}}, 2);
    f.spin_family = true;
    auto jf = family_to_json(f);
    auto f2 = family_from_json(jf);
    CHECK(family_to_json(f2) == jf);
    CHECK(check_spin_family_pin(f2).to_json() == check_spin_family_pin(f).to_json());
}
