#pragma once

#include <optional>
#include <vector>

#include "monopole/laurent.hpp"

namespace monopole {

// One factor (1 - w^j t)^e of a rational function in t; e may be negative
// (denominator factor).  Root exponents are reduced mod p.
struct LinearFactor {
    long root_exponent = 0;
    long long multiplicity = 0;
};

// numerator * prod (1 - w^j t)^{e_j} with coefficients in Z[w_p].
struct FactoredRational {
    long p = 2;
    LaurentPoly<CycInteger> numerator;
    std::vector<LinearFactor> factors;
};

struct RootOrder {
    long root_exponent = 0;
    long long required = 0;  // total denominator multiplicity at this root
    long long attained = 0;  // vanishing order of the numerator side (capped at required)
};

struct PolynomialityCheck {
    bool polynomial = false;
    std::optional<long> witness_root;  // first root exponent where the order falls short
    std::vector<RootOrder> orders;
};

// Decide whether the rational function is a polynomial in t up to a unit
// (power of t): expand the positive factors into the numerator and compare,
// at each root w^{-j} of a denominator factor, the order of vanishing against
// the required multiplicity.  Orders are computed by evaluating successive
// derivatives at the root.
PolynomialityCheck is_polynomial(const FactoredRational& r);

// Denominator-free expansion: numerator times all positive factors.
LaurentPoly<CycInteger> expand_numerator_side(const FactoredRational& r);

}  // namespace monopole
