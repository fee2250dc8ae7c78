#include "monopole/json_io.hpp"

#include <stdexcept>

namespace monopole {

Json json_int(const Int& v)
{
    if (v.fits_slong_p())
        return Json(v.get_si());
    return Json(v.get_str());
}

Int int_from_json(const Json& v)
{
    if (v.is_number_integer())
        return Int(static_cast<long>(v.get<long long>()));
    if (v.is_string())
        return Int(v.get<std::string>());
    throw std::invalid_argument("expected an integer");
}

Json base_to_json(const BaseSpace& b)
{
    const char* kind = nullptr;
    switch (b.kind) {
    case BaseSpace::Kind::Point:
        kind = "point";
        break;
    case BaseSpace::Kind::Torus:
        kind = "torus";
        break;
    case BaseSpace::Kind::RealProjective:
        kind = "rp";
        break;
    }
    return Json{{"kind", kind}, {"dim", b.dim}};
}

BaseSpace base_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("kind"))
        throw std::invalid_argument("base needs a \"kind\"");
    std::string kind = j.at("kind").get<std::string>();
    int dim = j.value("dim", 0);
    if (kind == "point")
        return BaseSpace::point();
    if (kind == "torus")
        return BaseSpace::torus(dim);
    if (kind == "rp")
        return BaseSpace::projective(dim);
    throw std::invalid_argument("unknown base kind \"" + kind + "\"");
}

Json hplus_to_json(const FlatBundleDescriptor& d)
{
    if (d.base.kind == BaseSpace::Kind::RealProjective)
        return Json{{"u", d.trivial_rank}, {"v", d.sign_rank}};
    Json lines = Json::array();
    for (const auto& line : d.line_summands) {
        Json l = Json::array();
        for (int i : line)
            l.push_back(i + 1);
        lines.push_back(std::move(l));
    }
    return Json{{"lines", std::move(lines)}, {"trivial", d.trivial_rank}};
}

FlatBundleDescriptor hplus_from_json(const Json& j, const BaseSpace& base)
{
    if (!j.is_object())
        throw std::invalid_argument("hplus must be an object");
    if (base.kind == BaseSpace::Kind::RealProjective) {
        if (!j.contains("u") || !j.contains("v"))
            throw std::invalid_argument("hplus over rp needs \"u\" and \"v\"");
        return FlatBundleDescriptor::over_projective(base.dim, j.at("u").get<long long>(),
                                                     j.at("v").get<long long>());
    }
    std::vector<std::vector<int>> lines;
    for (const auto& l : j.value("lines", Json::array())) {
        std::vector<int> line;
        for (const auto& i : l)
            line.push_back(i.get<int>() - 1);
        lines.push_back(std::move(line));
    }
    long long trivial = j.value("trivial", 0LL);
    if (base.kind == BaseSpace::Kind::Point) {
        if (!lines.empty())
            throw std::invalid_argument("a flat bundle over a point has no line summands");
        return FlatBundleDescriptor::over_point(trivial);
    }
    return FlatBundleDescriptor::over_torus(base.dim, std::move(lines), trivial);
}

Json spinc_to_json(const SpinCData& s)
{
    Json j;
    j["spin"] = s.is_spin;
    if (!s.is_spin)
        j["c2"] = json_int(s.c_squared);
    return j;
}

SpinCData spinc_from_json(const Json& hypothesis)
{
    bool spin = hypothesis.value("spin", false);
    if (spin) {
        if (hypothesis.contains("c2") && int_from_json(hypothesis.at("c2")) != 0)
            throw std::invalid_argument("spin hypotheses have c2 = 0");
        return SpinCData::spin();
    }
    if (!hypothesis.contains("c2"))
        throw std::invalid_argument("hypothesis needs \"c2\" or \"spin\": true");
    return SpinCData::with_c_squared(int_from_json(hypothesis.at("c2")));
}

Json family_to_json(const FamilyHypothesis& h)
{
    Json j = spinc_to_json(h.spinc);
    j["lattice"] = h.lattice.str();
    j["base"] = base_to_json(h.hplus.base);
    j["hplus"] = hplus_to_json(h.hplus);
    return j;
}

FamilyHypothesis family_from_json(const Json& j)
{
    FamilyHypothesis h;
    h.lattice = IntersectionLattice::parse(j.at("lattice").get<std::string>());
    h.spinc = spinc_from_json(j);
    BaseSpace base = j.contains("base") ? base_from_json(j.at("base")) : BaseSpace::point();
    if (!j.contains("hplus") && base.kind != BaseSpace::Kind::Point)
        throw std::invalid_argument("non-point base needs an \"hplus\" descriptor");
    h.hplus = j.contains("hplus")
                  ? hplus_from_json(j.at("hplus"), base)
                  : FlatBundleDescriptor::over_point(h.lattice.b_plus());
    h.spin_family = h.spinc.is_spin;
    h.validate();
    return h;
}

Json zp_action_to_json(const ZpActionHypothesis& h)
{
    Json j = spinc_to_json(h.spinc);
    j["lattice"] = h.lattice.str();
    Json action;
    action["p"] = h.p;
    action["d"] = h.index.d;
    action["h"] = h.eigen_dims;
    action["inv_dim"] = h.invariant_dim;
    if (h.type)
        action["type"] = *h.type == InvolutionType::Even ? "even" : "odd";
    j["action"] = std::move(action);
    return j;
}

ZpActionHypothesis zp_action_from_json(const Json& j)
{
    if (!j.contains("action"))
        throw std::invalid_argument("hypothesis needs an \"action\" object");
    const Json& a = j.at("action");
    ZpActionHypothesis h;
    h.p = a.at("p").get<long>();
    h.lattice = IntersectionLattice::parse(j.at("lattice").get<std::string>());
    h.spinc = spinc_from_json(j);
    h.index.p = h.p;
    h.index.d = a.at("d").get<std::vector<long long>>();
    if (a.contains("h"))
        h.eigen_dims = a.at("h").get<std::vector<long long>>();
    if (a.contains("inv_dim"))
        h.invariant_dim = a.at("inv_dim").get<long long>();
    else if (!h.eigen_dims.empty())
        h.invariant_dim = h.eigen_dims[0];
    if (h.eigen_dims.empty()) {
        // Only the invariant dimension was given; spread the rest evenly when
        // possible, otherwise require the full vector.
        long long rest = h.lattice.b_plus() - h.invariant_dim;
        if (rest % (h.p - 1) != 0)
            throw std::invalid_argument("cannot infer eigenspace dimensions; supply \"h\"");
        h.eigen_dims.assign(static_cast<size_t>(h.p), rest / (h.p - 1));
        h.eigen_dims[0] = h.invariant_dim;
    }
    if (a.contains("type")) {
        std::string t = a.at("type").get<std::string>();
        if (t == "even")
            h.type = InvolutionType::Even;
        else if (t == "odd")
            h.type = InvolutionType::Odd;
        else
            throw std::invalid_argument("action type must be \"even\" or \"odd\"");
    }
    h.validate();
    return h;
}

bool is_action_hypothesis(const Json& j)
{
    return j.is_object() && j.contains("action");
}

Json rep_to_json(const ZpVirtualRep& r)
{
    Json j = Json::array();
    for (const auto& m : r.mult())
        j.push_back(json_int(m));
    return j;
}

ZpVirtualRep rep_from_json(long p, const Json& j)
{
    if (!j.is_array() || j.size() != static_cast<size_t>(p))
        throw std::invalid_argument("expected " + std::to_string(p) + " multiplicities");
    std::vector<Int> mult;
    mult.reserve(j.size());
    for (const auto& v : j)
        mult.push_back(int_from_json(v));
    return ZpVirtualRep(p, std::move(mult));
}

ObstructionReport run_named_check(const std::string& name, const Json& j)
{
    if (name == "donaldson") {
        auto L = IntersectionLattice::parse(j.at("lattice").get<std::string>());
        return check_point_donaldson(L, spinc_from_json(j));
    }
    if (name == "furuta") {
        auto L = IntersectionLattice::parse(j.at("lattice").get<std::string>());
        std::optional<long long> override;
        if (j.contains("b_plus"))
            override = j.at("b_plus").get<long long>();
        return check_furuta_point(L, override);
    }
    if (name == "family-euler")
        return check_family_euler(family_from_json(j));
    if (name == "spin-family")
        return check_spin_family_pin(family_from_json(j));
    if (name == "z2")
        return check_z2_action(zp_action_from_json(j));
    if (name == "zp")
        return check_zp_action(zp_action_from_json(j));
    if (name == "even-involution") {
        auto h = zp_action_from_json(j);
        if (!h.type)
            throw std::invalid_argument("even-involution needs action.type");
        return check_even_involution(h.lattice.signature(), h.invariant_dim, *h.type);
    }
    if (name == "zp-spin") {
        auto h = zp_action_from_json(j);
        return check_zp_spin(h.index.d[0], h.invariant_dim);
    }
    if (name == "ten-eighths-equivariant") {
        long p = j.at("p").get<long>();
        return check_ten_eighths_equivariant(p, rep_from_json(p, j.at("hplus")),
                                             rep_from_json(p, j.at("v")),
                                             rep_from_json(p, j.at("vp")));
    }
    throw std::invalid_argument("unknown checker \"" + name + "\"");
}

}  // namespace monopole
