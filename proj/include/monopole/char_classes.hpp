#pragma once

#include <set>
#include <vector>

#include "monopole/graded_ring.hpp"

namespace monopole {

// The cohomology rings every computation here happens in.
PresentationPtr point_mod2_ring();
PresentationPtr torus_mod2_ring(int n);        // exterior algebra on t1..tn over Z/2
PresentationPtr projective_mod2_ring(int n);   // Z/2 [x] / x^{n+1}
PresentationPtr bpin2_integral_ring();         // Z[v,w] / <2w, w^2>, deg v = 4, deg w = 2
PresentationPtr bpin2_mod2_ring();             // Z/2 [v,u] / <u^3>, deg v = 4, deg u = 1
PresentationPtr integral_poly_ring(const std::vector<std::pair<std::string, int>>& gens);

// Total Segre classes s_0..s_length determined by c(V) s(V) = 1.
// chern holds c_0..c_r with c_0 = 1 and c_j homogeneous of degree 2j.
std::vector<GradedClass> total_segre(const std::vector<GradedClass>& chern, int length);

// Equivariant Euler class of a rank-r complex bundle carrying the scalar
// circle action: x^r + x^{r-1} c_1 + ... + c_r in base-ring[x], where x is a
// fresh degree-2 generator adjoined to the presentation.
GradedClass euler_s1_complex(const std::vector<GradedClass>& chern, int rank);
PresentationPtr adjoin_euler_variable(const PresentationPtr& base);

struct BaseSpace {
    enum class Kind { Point, Torus, RealProjective };
    Kind kind = Kind::Point;
    int dim = 0;

    static BaseSpace point() { return {Kind::Point, 0}; }
    static BaseSpace torus(int n) { return {Kind::Torus, n}; }
    static BaseSpace projective(int n) { return {Kind::RealProjective, n}; }

    bool operator==(const BaseSpace&) const = default;
};

// Flat real bundle over a point, torus, or real projective space, described
// summand by summand.  Over a torus each line summand records its first
// Stiefel-Whitney class as a subset of the degree-1 generators; over RP^n the
// bundle splits as (trivial)^u + (sign)^v.
struct FlatBundleDescriptor {
    BaseSpace base;
    std::vector<std::vector<int>> line_summands;  // torus: 0-based generator index sets
    long long trivial_rank = 0;                   // torus/point: trivial summands; rp: u
    long long sign_rank = 0;                      // rp only: v

    long long rank() const;
    void validate() const;

    static FlatBundleDescriptor over_point(long long trivial);
    static FlatBundleDescriptor over_torus(int n, std::vector<std::vector<int>> lines,
                                           long long trivial);
    static FlatBundleDescriptor over_projective(int n, long long u, long long v);
};

PresentationPtr base_mod2_ring(const BaseSpace& base);

// Total Stiefel-Whitney class in the mod-2 ring of the base.
GradedClass sw_total(const FlatBundleDescriptor& desc);

// Indices i in {b+, b+-1, b+-2} (clipped at 0) where w_i != 0; the degree-0
// component of the total class is 1, so index 0 always qualifies when it lies
// in the window.
std::set<long long> sw_top_range_nonzero(const FlatBundleDescriptor& desc, long long b_plus);

}  // namespace monopole
