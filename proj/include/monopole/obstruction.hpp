#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "monopole/char_classes.hpp"
#include "monopole/divisibility.hpp"
#include "monopole/lattice.hpp"
#include "monopole/rep_ring.hpp"

namespace monopole {

using Json = nlohmann::json;

enum class Verdict { Obstructed, Consistent, NotApplicable };

std::string verdict_name(Verdict v);

// Structured outcome of a checker: which theorem fired, the violated
// inequality or identity, and an explicit witness.  A checker only reports
// "obstructed" when the cited necessary condition for smooth existence is
// numerically violated by the input.
struct ObstructionReport {
    Verdict verdict = Verdict::Consistent;
    std::string theorem;
    Json witness = Json::object();
    Json inputs_echo = Json::object();

    Json to_json() const;
    bool obstructed() const { return verdict == Verdict::Obstructed; }
};

// Hypothetical smooth spin^c family: intersection form and characteristic
// data of the fibre, plus the flat H^+ bundle over the base.  Optional Segre
// data carries mod-2 reductions of s_j(D) in the base ring (index j = 1-based
// position).
struct FamilyHypothesis {
    IntersectionLattice lattice;
    SpinCData spinc;
    FlatBundleDescriptor hplus;
    std::optional<std::vector<GradedClass>> segre;
    bool spin_family = false;

    void validate() const;
};

enum class InvolutionType { Even, Odd };

// Hypothetical smooth Z/p action: eigenspace data of the lifted action on
// the index bundle and on H^+(X).
struct ZpActionHypothesis {
    long p = 2;
    IntersectionLattice lattice;
    SpinCData spinc;
    EquivariantIndexData index;
    long long invariant_dim = 0;           // dim_R H^+(X)^{Z_p}
    std::vector<long long> eigen_dims;     // h_j, complex dims of H^+(X)_C eigenspaces
    std::optional<InvolutionType> type;    // p = 2, spin case only

    void validate() const;
};

// b+ = 0: the finite-dimensional approximation forces d <= 0.
ObstructionReport check_point_donaldson(const IntersectionLattice& L, const SpinCData& s);

// Families constraint: a nonzero Euler class of H^+(X) forces d <= 0 and
// kills e(H^+) s_j(D) for j > -d.  The Euler class is detected through its
// mod-2 reduction w_{b+}.
ObstructionReport check_family_euler(const FamilyHypothesis& h);

// Spin families: w_i(H^+(X)) != 0 for some i in {b+, b+-1, b+-2} forces
// d <= 0.
ObstructionReport check_spin_family_pin(const FamilyHypothesis& h);

// Point case of the spin constraints: the quaternionic index -sigma/16 must
// be an integer, and b+ >= d + 1 when b+ >= 1 (d > 0 is already fatal when
// b+ = 0).
ObstructionReport check_furuta_point(const IntersectionLattice& L,
                                     std::optional<long long> b_plus_override = std::nullopt);

// Z/2 actions with H^+(X)^{Z_2} = 0: both virtual eigenspace dimensions
// d_+, d_- of the index must be nonpositive.  The report carries a
// Laurent-divisibility certificate for the verdict.
ObstructionReport check_z2_action(const ZpActionHypothesis& h);

// Even-type spin involutions with sigma < 0 need dim H^+(X)^{Z_2} >= 3; the
// witness reproduces the violation through the real-projective Borel family.
ObstructionReport check_even_involution(long long sigma, long long invariant_dim,
                                        InvolutionType type);

// Z/p actions (p odd) with H^+(X)^{Z_p} = 0: every d_j must be nonpositive.
// The report carries a cyclotomic-divisibility certificate.
ObstructionReport check_zp_action(const ZpActionHypothesis& h);

// Spin Z/p actions with nonzero invariant subspace: dim >= d_0 + 1.
ObstructionReport check_zp_spin(long long d0, long long invariant_dim);

// Equivariant 10/8: existence of eta in R[Z_p] with
//   lambda(H+_C) * lambda(psi2 V') = eta * lambda(psi2 V),
// improved by a factor of 2 when the K-theoretic Euler class of H+_C
// vanishes.  V, V' must be genuine and quaternionic-symmetric.
ObstructionReport check_ten_eighths_equivariant(long p, const ZpVirtualRep& hplus_c,
                                                const ZpVirtualRep& V, const ZpVirtualRep& Vp);

// Divisibility instances behind the Z/2 and Z/p verdicts, exposed for the
// oracle-equivalence suites.  Minimal nonnegative instantiation of the
// stabilization ambiguity: a'_j = max(0, -d_j), a_j = a'_j + d_j.
FactoredRational z2_divisibility_instance(long long b_plus, long long d_plus, long long d_minus);
FactoredRational zp_divisibility_instance(long p, const std::vector<long long>& d,
                                          const std::vector<long long>& h);

}  // namespace monopole
