#include "monopole/char_classes.hpp"

#include <stdexcept>

namespace monopole {

PresentationPtr point_mod2_ring()
{
    static PresentationPtr ring = make_presentation(2, {});
    return ring;
}

PresentationPtr torus_mod2_ring(int n)
{
    std::vector<RingGenerator> gens;
    gens.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        gens.push_back({"t" + std::to_string(i), 1, 2, 0});
    return make_presentation(2, std::move(gens));
}

PresentationPtr projective_mod2_ring(int n)
{
    return make_presentation(2, {{"x", 1, n + 1, 0}});
}

PresentationPtr bpin2_integral_ring()
{
    static PresentationPtr ring = make_presentation(0, {{"v", 4, 0, 0}, {"w", 2, 2, 2}});
    return ring;
}

PresentationPtr bpin2_mod2_ring()
{
    static PresentationPtr ring = make_presentation(2, {{"v", 4, 0, 0}, {"u", 1, 3, 0}});
    return ring;
}

PresentationPtr integral_poly_ring(const std::vector<std::pair<std::string, int>>& gens)
{
    std::vector<RingGenerator> gs;
    gs.reserve(gens.size());
    for (const auto& [name, degree] : gens)
        gs.push_back({name, degree, 0, 0});
    return make_presentation(0, std::move(gs));
}

std::vector<GradedClass> total_segre(const std::vector<GradedClass>& chern, int length)
{
    if (chern.empty() || !chern[0].is_one())
        throw std::invalid_argument("total Chern class must start with c_0 = 1");
    const auto& pres = chern[0].presentation();
    for (std::size_t j = 1; j < chern.size(); ++j) {
        auto d = chern[j].homogeneous_degree();
        if (d && *d != static_cast<int>(2 * j))
            throw std::invalid_argument("c_j must be homogeneous of degree 2j");
    }

    std::vector<GradedClass> segre;
    segre.reserve(static_cast<std::size_t>(length) + 1);
    segre.push_back(GradedClass::scalar(pres, 1));
    for (int k = 1; k <= length; ++k) {
        GradedClass s(pres);
        for (int i = 1; i <= k && i < static_cast<int>(chern.size()); ++i)
            s -= chern[static_cast<std::size_t>(i)] * segre[static_cast<std::size_t>(k - i)];
        segre.push_back(std::move(s));
    }
    return segre;
}

PresentationPtr adjoin_euler_variable(const PresentationPtr& base)
{
    return base->adjoined({"x", 2, 0, 0});
}

GradedClass euler_s1_complex(const std::vector<GradedClass>& chern, int rank)
{
    if (chern.empty() || !chern[0].is_one())
        throw std::invalid_argument("total Chern class must start with c_0 = 1");
    auto extended = adjoin_euler_variable(chern[0].presentation());
    const std::size_t xi = extended->arity() - 1;
    GradedClass e(extended);
    for (int i = 0; i <= rank; ++i) {
        GradedClass term = GradedClass::generator(extended, xi, rank - i);
        if (i < static_cast<int>(chern.size()))
            e += term * chern[static_cast<std::size_t>(i)].lifted(extended);
    }
    return e;
}

long long FlatBundleDescriptor::rank() const
{
    if (base.kind == BaseSpace::Kind::RealProjective)
        return trivial_rank + sign_rank;
    return static_cast<long long>(line_summands.size()) + trivial_rank;
}

void FlatBundleDescriptor::validate() const
{
    if (trivial_rank < 0 || sign_rank < 0)
        throw std::invalid_argument("negative summand rank");
    switch (base.kind) {
    case BaseSpace::Kind::Point:
        if (!line_summands.empty() || sign_rank != 0)
            throw std::invalid_argument("a flat bundle over a point is trivial");
        break;
    case BaseSpace::Kind::Torus:
        if (sign_rank != 0)
            throw std::invalid_argument("sign summands only make sense over projective space");
        for (const auto& line : line_summands)
            for (int i : line)
                if (i < 0 || i >= base.dim)
                    throw std::invalid_argument("line summand uses a generator out of range");
        break;
    case BaseSpace::Kind::RealProjective:
        if (!line_summands.empty())
            throw std::invalid_argument("projective descriptors use (u, v) ranks");
        break;
    }
}

FlatBundleDescriptor FlatBundleDescriptor::over_point(long long trivial)
{
    FlatBundleDescriptor d;
    d.base = BaseSpace::point();
    d.trivial_rank = trivial;
    return d;
}

FlatBundleDescriptor FlatBundleDescriptor::over_torus(int n, std::vector<std::vector<int>> lines,
                                                      long long trivial)
{
    FlatBundleDescriptor d;
    d.base = BaseSpace::torus(n);
    d.line_summands = std::move(lines);
    d.trivial_rank = trivial;
    d.validate();
    return d;
}

FlatBundleDescriptor FlatBundleDescriptor::over_projective(int n, long long u, long long v)
{
    FlatBundleDescriptor d;
    d.base = BaseSpace::projective(n);
    d.trivial_rank = u;
    d.sign_rank = v;
    d.validate();
    return d;
}

PresentationPtr base_mod2_ring(const BaseSpace& base)
{
    switch (base.kind) {
    case BaseSpace::Kind::Point:
        return point_mod2_ring();
    case BaseSpace::Kind::Torus:
        return torus_mod2_ring(base.dim);
    case BaseSpace::Kind::RealProjective:
        return projective_mod2_ring(base.dim);
    }
    throw std::logic_error("unreachable");
}

GradedClass sw_total(const FlatBundleDescriptor& desc)
{
    desc.validate();
    auto ring = base_mod2_ring(desc.base);
    GradedClass total = GradedClass::scalar(ring, 1);
    switch (desc.base.kind) {
    case BaseSpace::Kind::Point:
        break;
    case BaseSpace::Kind::Torus:
        for (const auto& line : desc.line_summands) {
            GradedClass w1 = GradedClass::scalar(ring, 1);
            for (int i : line)
                w1 += GradedClass::generator(ring, static_cast<std::size_t>(i));
            total = total * w1;
        }
        break;
    case BaseSpace::Kind::RealProjective: {
        GradedClass one_plus_x =
            GradedClass::scalar(ring, 1) + GradedClass::generator(ring, 0);
        total = one_plus_x.pow(static_cast<unsigned long long>(desc.sign_rank));
        break;
    }
    }
    return total;
}

std::set<long long> sw_top_range_nonzero(const FlatBundleDescriptor& desc, long long b_plus)
{
    if (desc.rank() != b_plus)
        throw std::invalid_argument("bundle rank does not match b+");
    GradedClass total = sw_total(desc);
    std::set<long long> nonzero;
    for (long long i = b_plus - 2; i <= b_plus; ++i) {
        if (i < 0)
            continue;
        if (!total.component(static_cast<int>(i)).is_zero())
            nonzero.insert(i);
    }
    return nonzero;
}

}  // namespace monopole
