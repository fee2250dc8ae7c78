#include "monopole/divisibility.hpp"

#include <map>

namespace monopole {

namespace {

// (1 - w^j t)
LaurentPoly<CycInteger> linear_term(long p, long j)
{
    LaurentPoly<CycInteger> f;
    f.add_term(0, CycInteger(p, 1));
    f.add_term(1, -CycInteger::omega_power(p, j));
    return f;
}

}  // namespace

LaurentPoly<CycInteger> expand_numerator_side(const FactoredRational& r)
{
    LaurentPoly<CycInteger> n = r.numerator;
    for (const auto& f : r.factors) {
        if (f.multiplicity <= 0)
            continue;
        n = n * linear_term(r.p, mod_reduce(f.root_exponent, r.p))
                    .pow(static_cast<unsigned long long>(f.multiplicity));
    }
    return n;
}

PolynomialityCheck is_polynomial(const FactoredRational& r)
{
    PolynomialityCheck out;
    std::map<long, long long> required;
    for (const auto& f : r.factors) {
        if (f.multiplicity < 0)
            required[mod_reduce(f.root_exponent, r.p)] += -f.multiplicity;
    }

    LaurentPoly<CycInteger> side = expand_numerator_side(r);
    if (side.is_zero()) {
        out.polynomial = true;  // the zero function
        return out;
    }

    out.polynomial = true;
    for (const auto& [j, need] : required) {
        RootOrder ord{j, need, 0};
        LaurentPoly<CycInteger> d = side;
        while (ord.attained < need) {
            if (!eval_at_root(d, r.p, mod_reduce(-j, r.p)).is_zero())
                break;
            ++ord.attained;
            d = d.derivative();
        }
        if (ord.attained < need) {
            out.polynomial = false;
            if (!out.witness_root)
                out.witness_root = j;
        }
        out.orders.push_back(ord);
    }
    return out;
}

}  // namespace monopole
