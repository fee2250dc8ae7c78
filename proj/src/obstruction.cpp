#include "monopole/obstruction.hpp"

#include <stdexcept>

#include "monopole/json_io.hpp"

namespace monopole {

namespace {

Json certificate_json(const FactoredRational& r, const PolynomialityCheck& c)
{
    Json factors = Json::array();
    for (const auto& f : r.factors)
        factors.push_back(Json::array({f.root_exponent, f.multiplicity}));
    Json orders = Json::array();
    for (const auto& o : c.orders)
        orders.push_back(
            Json{{"root", o.root_exponent}, {"required", o.required}, {"attained", o.attained}});
    Json j;
    j["p"] = r.p;
    j["numerator"] = r.numerator.str();
    j["factors"] = std::move(factors);
    j["polynomial"] = c.polynomial;
    j["witness_root"] = c.witness_root ? Json(*c.witness_root) : Json(nullptr);
    j["orders"] = std::move(orders);
    return j;
}

ObstructionReport not_applicable(std::string theorem, Json echo, std::string reason)
{
    ObstructionReport r;
    r.verdict = Verdict::NotApplicable;
    r.theorem = std::move(theorem);
    r.inputs_echo = std::move(echo);
    r.witness = Json{{"reason", std::move(reason)}};
    return r;
}

}  // namespace

std::string verdict_name(Verdict v)
{
    switch (v) {
    case Verdict::Obstructed:
        return "obstructed";
    case Verdict::Consistent:
        return "consistent";
    case Verdict::NotApplicable:
        return "not_applicable";
    }
    return "?";
}

Json ObstructionReport::to_json() const
{
    return Json{{"verdict", verdict_name(verdict)},
                {"theorem", theorem},
                {"witness", witness},
                {"inputs_echo", inputs_echo}};
}

void FamilyHypothesis::validate() const
{
    spinc.validate(lattice);
    hplus.validate();
    if (hplus.rank() != lattice.b_plus())
        throw std::invalid_argument("H+ bundle rank " + std::to_string(hplus.rank()) +
                                    " does not match b+ = " + std::to_string(lattice.b_plus()));
    if (spin_family && !spinc.is_spin)
        throw std::invalid_argument("a spin family needs spin characteristic data");
    if (segre) {
        auto ring = base_mod2_ring(hplus.base);
        for (const auto& s : *segre)
            if (!(*s.presentation() == *ring))
                throw std::invalid_argument("Segre data must live in the base mod-2 ring");
    }
}

void ZpActionHypothesis::validate() const
{
    if (!is_prime(p))
        throw std::invalid_argument("group order must be prime, got " + std::to_string(p));
    spinc.validate(lattice);
    index.validate();
    if (index.p != p)
        throw std::invalid_argument("index data group order mismatch");
    if (invariant_dim < 0)
        throw std::invalid_argument("negative invariant dimension");
    if (eigen_dims.size() != static_cast<size_t>(p))
        throw std::invalid_argument("expected one eigenspace dimension per character");
    long long total = 0;
    for (long long hj : eigen_dims) {
        if (hj < 0)
            throw std::invalid_argument("negative eigenspace dimension");
        total += hj;
    }
    for (long j = 1; j < p; ++j)
        if (eigen_dims[static_cast<size_t>(j)] != eigen_dims[static_cast<size_t>(p - j)])
            throw std::invalid_argument(
                "eigenspace dimensions of a complexified real representation need h_j = h_{p-j}");
    if (eigen_dims[0] != invariant_dim)
        throw std::invalid_argument("h_0 must equal the invariant dimension");
    if (total != lattice.b_plus())
        throw std::invalid_argument("eigenspace dimensions must sum to b+");
    if (dirac_index(lattice, spinc) != Int(static_cast<long>(index.total())))
        throw std::invalid_argument("virtual eigenspace dimensions must sum to the index d");
    if (type && p != 2)
        throw std::invalid_argument("involution type only applies to p = 2");
}

ObstructionReport check_point_donaldson(const IntersectionLattice& L, const SpinCData& s)
{
    Int d = dirac_index(L, s);
    ObstructionReport r;
    r.theorem = "donaldson";
    r.inputs_echo = spinc_to_json(s);
    r.inputs_echo["lattice"] = L.str();
    r.inputs_echo["d"] = json_int(d);
    if (L.b_plus() != 0)
        return not_applicable(r.theorem, r.inputs_echo,
                              "b+ = " + std::to_string(L.b_plus()) + " is positive");
    if (d > 0) {
        r.verdict = Verdict::Obstructed;
        r.witness = Json{{"d", json_int(d)},
                         {"c2", json_int(s.c_squared)},
                         {"sigma", L.signature()},
                         {"violated", "d <= 0 for b+ = 0"}};
    } else {
        r.verdict = Verdict::Consistent;
        r.witness = Json::object();
    }
    return r;
}

ObstructionReport check_family_euler(const FamilyHypothesis& h)
{
    h.validate();
    const long long b_plus = h.lattice.b_plus();
    if (b_plus == 0)
        return check_point_donaldson(h.lattice, h.spinc);

    ObstructionReport r;
    r.theorem = "family-euler";
    r.inputs_echo = family_to_json(h);

    GradedClass total = sw_total(h.hplus);
    GradedClass top = total.component(static_cast<int>(b_plus));
    Int d = dirac_index(h.lattice, h.spinc);
    if (top.is_zero()) {
        r.verdict = Verdict::Consistent;
        return r;
    }
    if (d > 0) {
        r.verdict = Verdict::Obstructed;
        r.witness = Json{{"d", json_int(d)},
                         {"nonzero_class", Json{{"degree", b_plus}, {"class", top.str()}}},
                         {"violated", "e(H+) != 0 forces d <= 0"}};
        return r;
    }
    if (h.segre) {
        for (size_t idx = 0; idx < h.segre->size(); ++idx) {
            long long j = static_cast<long long>(idx) + 1;
            if (Int(static_cast<long>(j)) <= -d)
                continue;
            GradedClass prod = top * (*h.segre)[idx];
            if (!prod.is_zero()) {
                r.verdict = Verdict::Obstructed;
                r.witness = Json{{"d", json_int(d)},
                                 {"segre_index", j},
                                 {"product_class", prod.str()},
                                 {"violated", "e(H+) s_j(D) = 0 for j > -d"}};
                return r;
            }
        }
    }
    r.verdict = Verdict::Consistent;
    return r;
}

ObstructionReport check_spin_family_pin(const FamilyHypothesis& h)
{
    h.validate();
    ObstructionReport r;
    r.theorem = "spin-family-pin";
    r.inputs_echo = family_to_json(h);
    if (!h.spin_family)
        return not_applicable(r.theorem, r.inputs_echo, "not a spin family");

    const long long b_plus = h.lattice.b_plus();
    auto nonzero = sw_top_range_nonzero(h.hplus, b_plus);
    Int d = dirac_index(h.lattice, h.spinc);
    if (!nonzero.empty() && d > 0) {
        r.verdict = Verdict::Obstructed;
        r.witness = Json{{"d", json_int(d)},
                         {"nonzero_w_indices", nonzero},
                         {"window", Json::array({b_plus - 2, b_plus - 1, b_plus})},
                         {"violated", "w_i(H+) != 0 for i in {b+, b+-1, b+-2} forces d <= 0"}};
    } else {
        r.verdict = Verdict::Consistent;
    }
    return r;
}

ObstructionReport check_furuta_point(const IntersectionLattice& L,
                                     std::optional<long long> b_plus_override)
{
    ObstructionReport r;
    r.theorem = "furuta-10-8";
    const long long b_plus = b_plus_override.value_or(L.b_plus());
    if (b_plus < 0)
        throw std::invalid_argument("b+ override must be nonnegative");
    const long long sigma = L.signature();
    if (!L.even()) {
        r.inputs_echo = Json{{"lattice", L.str()}, {"b_plus", b_plus}, {"sigma", sigma}};
        return not_applicable(r.theorem, r.inputs_echo, "odd intersection form");
    }
    const long long d = -sigma / 8;  // spin: c = 0
    r.inputs_echo =
        Json{{"lattice", L.str()}, {"b_plus", b_plus}, {"sigma", sigma}, {"d", d}};
    if (sigma % 16 != 0) {
        r.verdict = Verdict::Obstructed;
        r.witness = Json{{"failure", "index-integrality"},
                         {"sigma", sigma},
                         {"violated", "the quaternionic index -sigma/16 must be an integer"}};
        return r;
    }
    bool obstructed = b_plus >= 1 ? b_plus < d + 1 : d > 0;
    if (obstructed) {
        r.verdict = Verdict::Obstructed;
        r.witness = Json{{"b_plus", b_plus},
                         {"d", d},
                         {"violated", b_plus >= 1 ? "b+ >= d + 1" : "d <= 0 for b+ = 0"}};
    } else {
        r.verdict = Verdict::Consistent;
    }
    return r;
}

FactoredRational z2_divisibility_instance(long long b_plus, long long d_plus, long long d_minus)
{
    const long long ap_p = d_plus < 0 ? -d_plus : 0;   // a'_+
    const long long ap_m = d_minus < 0 ? -d_minus : 0; // a'_-
    const long long a_p = ap_p + d_plus;
    const long long a_m = ap_m + d_minus;

    FactoredRational r;
    r.p = 2;
    Int two_pow = 1;
    two_pow <<= static_cast<unsigned long>(b_plus);
    r.numerator = LaurentPoly<CycInteger>::constant(CycInteger(2, two_pow));
    auto push = [&r](long j, long long e) {
        if (e != 0)
            r.factors.push_back({j, e});
    };
    push(0, 2 * ap_p);
    push(1, 2 * ap_m);
    push(0, -2 * a_p);
    push(1, -2 * a_m);
    return r;
}

FactoredRational zp_divisibility_instance(long p, const std::vector<long long>& d,
                                          const std::vector<long long>& h)
{
    if (d.size() != static_cast<size_t>(p) || h.size() != static_cast<size_t>(p))
        throw std::invalid_argument("expected p entries in d and h");
    FactoredRational r;
    r.p = p;
    CycInteger numerator(p, 1);
    for (long j = 1; j < p; ++j) {
        CycInteger factor = CycInteger(p, 1) - CycInteger::omega_power(p, j);
        for (long long i = 0; i < h[static_cast<size_t>(j)]; ++i)
            numerator *= factor;
    }
    r.numerator = LaurentPoly<CycInteger>::constant(numerator);
    for (long j = 0; j < p; ++j) {
        long long e = -(d[static_cast<size_t>(j)] + d[static_cast<size_t>((p - j) % p)]);
        if (e != 0)
            r.factors.push_back({j, e});
    }
    return r;
}

ObstructionReport check_z2_action(const ZpActionHypothesis& h)
{
    h.validate();
    ObstructionReport r;
    r.theorem = "z2-action";
    r.inputs_echo = zp_action_to_json(h);
    if (h.p != 2)
        return not_applicable(r.theorem, r.inputs_echo, "requires p = 2");
    if (h.invariant_dim != 0)
        return not_applicable(r.theorem, r.inputs_echo, "H+(X)^{Z_2} is nonzero");

    const long long d_plus = h.index.d[0];
    const long long d_minus = h.index.d[1];
    if (d_plus <= 0 && d_minus <= 0) {
        r.verdict = Verdict::Consistent;
        return r;
    }
    Json signs = Json::array();
    if (d_plus > 0)
        signs.push_back("+");
    if (d_minus > 0)
        signs.push_back("-");
    auto instance = z2_divisibility_instance(h.lattice.b_plus(), d_plus, d_minus);
    auto cert = is_polynomial(instance);
    r.verdict = Verdict::Obstructed;
    r.witness = Json{{"failing_signs", std::move(signs)},
                     {"d_plus", d_plus},
                     {"d_minus", d_minus},
                     {"certificate", certificate_json(instance, cert)},
                     {"violated", "d_+, d_- <= 0 when H+(X)^{Z_2} = 0"}};
    return r;
}

ObstructionReport check_even_involution(long long sigma, long long invariant_dim,
                                        InvolutionType type)
{
    ObstructionReport r;
    r.theorem = "even-involution";
    r.inputs_echo = Json{{"sigma", sigma},
                         {"inv_dim", invariant_dim},
                         {"type", type == InvolutionType::Even ? "even" : "odd"}};
    if (type != InvolutionType::Even)
        return not_applicable(r.theorem, r.inputs_echo, "odd-type involution");
    if (sigma >= 0)
        return not_applicable(r.theorem, r.inputs_echo, "nonnegative signature");
    if (invariant_dim < 0)
        throw std::invalid_argument("negative invariant dimension");
    if (sigma % 8 != 0)
        throw std::invalid_argument("the signature of an even form is divisible by 8");

    if (invariant_dim > 2) {
        r.verdict = Verdict::Consistent;
        return r;
    }

    // Reproduce the violation through the antipodal Borel family over
    // RP^{b+} with H+ = (trivial)^u + (sign)^v, u = invariant_dim.
    const long long b_plus = invariant_dim + 3;
    FamilyHypothesis model;
    model.lattice = IntersectionLattice::single(Block::H, b_plus)
                        .connected_sum(IntersectionLattice::single(Block::E8Minus, -sigma / 8));
    model.spinc = SpinCData::spin();
    model.hplus = FlatBundleDescriptor::over_projective(static_cast<int>(b_plus), invariant_dim,
                                                        b_plus - invariant_dim);
    model.spin_family = true;
    ObstructionReport inner = check_spin_family_pin(model);

    r.verdict = Verdict::Obstructed;
    r.witness = Json{{"inv_dim", invariant_dim},
                     {"bound", 3},
                     {"violated", "dim H+(X)^{Z_2} >= 3 when sigma < 0"},
                     {"family_model", Json{{"base", Json{{"kind", "rp"}, {"dim", b_plus}}},
                                           {"u", invariant_dim},
                                           {"v", b_plus - invariant_dim},
                                           {"report", inner.to_json()}}}};
    return r;
}

ObstructionReport check_zp_action(const ZpActionHypothesis& h)
{
    h.validate();
    ObstructionReport r;
    r.theorem = "zp-action";
    r.inputs_echo = zp_action_to_json(h);
    if (h.p == 2)
        return not_applicable(r.theorem, r.inputs_echo, "requires odd p");
    if (h.invariant_dim != 0)
        return not_applicable(r.theorem, r.inputs_echo, "H+(X)^{Z_p} is nonzero");

    long witness_j = -1;
    for (long j = 0; j < h.p; ++j)
        if (h.index.d[static_cast<size_t>(j)] > 0) {
            witness_j = j;
            break;
        }
    if (witness_j < 0) {
        r.verdict = Verdict::Consistent;
        return r;
    }

    // Relabel the lift by w^{witness_j} so the failing eigenvalue sits at
    // j = 0, where the divisibility instance must fail at root exponent 0.
    std::vector<long long> relabeled(static_cast<size_t>(h.p));
    for (long m = 0; m < h.p; ++m)
        relabeled[static_cast<size_t>(m)] = h.index.d[static_cast<size_t>((m + witness_j) % h.p)];
    auto instance = zp_divisibility_instance(h.p, relabeled, h.eigen_dims);
    auto cert = is_polynomial(instance);

    r.verdict = Verdict::Obstructed;
    r.witness = Json{{"j", witness_j},
                     {"d_j", h.index.d[static_cast<size_t>(witness_j)]},
                     {"relabeling", witness_j},
                     {"certificate", certificate_json(instance, cert)},
                     {"violated", "d_j <= 0 for each j when H+(X)^{Z_p} = 0"}};
    return r;
}

ObstructionReport check_zp_spin(long long d0, long long invariant_dim)
{
    ObstructionReport r;
    r.theorem = "zp-spin";
    r.inputs_echo = Json{{"d0", d0}, {"inv_dim", invariant_dim}};
    if (invariant_dim < 0)
        throw std::invalid_argument("negative invariant dimension");
    if (invariant_dim == 0)
        return not_applicable(r.theorem, r.inputs_echo, "H+(X)^{Z_p} = 0");
    if (invariant_dim < d0 + 1) {
        r.verdict = Verdict::Obstructed;
        r.witness = Json{{"d0", d0},
                         {"inv_dim", invariant_dim},
                         {"violated", "dim_R H+(X)^{Z_p} >= d_0 + 1"}};
    } else {
        r.verdict = Verdict::Consistent;
    }
    return r;
}

ObstructionReport check_ten_eighths_equivariant(long p, const ZpVirtualRep& hplus_c,
                                                const ZpVirtualRep& V, const ZpVirtualRep& Vp)
{
    if (hplus_c.modulus() != p || V.modulus() != p || Vp.modulus() != p)
        throw std::domain_error("representation group order mismatch");
    if (!hplus_c.is_genuine() || !hplus_c.is_real_symmetric())
        throw std::domain_error("H+(X)_C must be genuine with h_j = h_{p-j}");
    for (const auto* r : {&V, &Vp}) {
        if (!r->is_genuine() || !r->is_real_symmetric())
            throw std::domain_error("V and V' must be genuine and quaternionic-symmetric");
        if (r->dim() % 2 != 0)
            throw std::domain_error("quaternionic representations have even rank");
    }

    ObstructionReport rep;
    rep.theorem = "ten-eighths-equivariant";
    rep.inputs_echo = Json{{"p", p},
                           {"hplus", rep_to_json(hplus_c)},
                           {"v", rep_to_json(V)},
                           {"vp", rep_to_json(Vp)}};

    ZpVirtualRep lhs = lambda_total(hplus_c) * lambda_total(psi2(Vp));
    ZpVirtualRep rhs = lambda_total(psi2(V));
    const bool refined = k_euler(hplus_c).is_zero();
    ZpVirtualRep divisor = refined ? rhs * Int(2) : rhs;

    if (repring_exact_divide(lhs, divisor)) {
        rep.verdict = Verdict::Consistent;
        return rep;
    }

    rep.verdict = Verdict::Obstructed;
    Json witness{{"refined", refined},
                 {"violated", refined ? "lambda(H+_C) lambda(psi2 V') = 2 eta lambda(psi2 V)"
                                      : "lambda(H+_C) lambda(psi2 V') = eta lambda(psi2 V)"}};
    bool found_character = false;
    for (long k = 0; k < p; ++k) {
        CycInteger num = character_at(lhs, k);
        CycInteger den = character_at(divisor, k);
        bool divisible = den.is_zero() ? num.is_zero() : cyc_exact_divide(num, den).has_value();
        if (!divisible) {
            witness["character_index"] = k;
            witness["tr_dividend"] = num.str();
            witness["tr_divisor"] = den.str();
            found_character = true;
            break;
        }
    }
    if (!found_character)
        witness["failure"] = "every character divides but the circulant system has no "
                             "integral solution";
    rep.witness = std::move(witness);
    return rep;
}

}  // namespace monopole
