#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "monopole/cyclotomic.hpp"
#include "monopole/numeric.hpp"

namespace monopole {

// Coefficient-ring glue for LaurentPoly: zero test plus the fraction field
// used by exact division.
template <class C>
struct coeff_traits;

template <>
struct coeff_traits<Int> {
    using fraction = Rat;
    static bool is_zero(const Int& x) { return x == 0; }
    static bool frac_is_zero(const Rat& x) { return x == 0; }
    static Rat to_fraction(const Int& x) { return Rat(x); }
    static Rat frac_divide(const Rat& a, const Rat& b) { return a / b; }
    static std::optional<Int> from_fraction(const Rat& q)
    {
        if (q.get_den() != 1)
            return std::nullopt;
        return Int(q.get_num());
    }
};

template <>
struct coeff_traits<Rat> {
    using fraction = Rat;
    static bool is_zero(const Rat& x) { return x == 0; }
    static bool frac_is_zero(const Rat& x) { return x == 0; }
    static Rat to_fraction(const Rat& x) { return x; }
    static Rat frac_divide(const Rat& a, const Rat& b) { return a / b; }
    static std::optional<Rat> from_fraction(const Rat& q) { return q; }
};

template <>
struct coeff_traits<CycInteger> {
    using fraction = CycRational;
    static bool is_zero(const CycInteger& x) { return x.is_zero(); }
    static bool frac_is_zero(const CycRational& x) { return x.is_zero(); }
    static CycRational to_fraction(const CycInteger& x) { return CycRational(x); }
    static CycRational frac_divide(const CycRational& a, const CycRational& b) { return a / b; }
    static std::optional<CycInteger> from_fraction(const CycRational& q)
    {
        if (!q.is_integral())
            return std::nullopt;
        return q.to_integer();
    }
};

template <>
struct coeff_traits<CycRational> {
    using fraction = CycRational;
    static bool is_zero(const CycRational& x) { return x.is_zero(); }
    static bool frac_is_zero(const CycRational& x) { return x.is_zero(); }
    static CycRational to_fraction(const CycRational& x) { return x; }
    static CycRational frac_divide(const CycRational& a, const CycRational& b) { return a / b; }
    static std::optional<CycRational> from_fraction(const CycRational& q) { return q; }
};

// Laurent polynomial in one variable: a finite exponent -> coefficient map
// with no stored zeros.  Degree bounds are always derived from the map.
template <class C>
class LaurentPoly {
public:
    using traits = coeff_traits<C>;

    LaurentPoly() = default;

    static LaurentPoly term(const C& c, long exp)
    {
        LaurentPoly r;
        r.add_term(exp, c);
        return r;
    }
    static LaurentPoly constant(const C& c) { return term(c, 0); }

    const std::map<long, C>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    long min_exp() const
    {
        require_nonzero();
        return terms_.begin()->first;
    }
    long max_exp() const
    {
        require_nonzero();
        return terms_.rbegin()->first;
    }

    C coeff(long exp) const
    {
        auto it = terms_.find(exp);
        if (it != terms_.end())
            return it->second;
        return zero_like();
    }

    void add_term(long exp, const C& c)
    {
        if (traits::is_zero(c))
            return;
        auto [it, inserted] = terms_.emplace(exp, c);
        if (!inserted) {
            it->second += c;
            if (traits::is_zero(it->second))
                terms_.erase(it);
        }
    }

    LaurentPoly operator-() const
    {
        LaurentPoly r(*this);
        for (auto& [e, c] : r.terms_)
            c = -c;
        return r;
    }

    LaurentPoly& operator+=(const LaurentPoly& o)
    {
        for (const auto& [e, c] : o.terms_)
            add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o)
    {
        for (const auto& [e, c] : o.terms_)
            add_term(e, C(-c));
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
    {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                r.add_term(ea + eb, C(ca * cb));
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    LaurentPoly shifted(long k) const
    {
        LaurentPoly r;
        for (const auto& [e, c] : terms_)
            r.terms_.emplace(e + k, c);
        return r;
    }

    LaurentPoly derivative() const
    {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) {
            if (e == 0)
                continue;
            C nc(c);
            nc *= Int(e);
            r.add_term(e - 1, nc);
        }
        return r;
    }

    LaurentPoly pow(unsigned long long n) const
    {
        if (n == 0) {
            LaurentPoly one;
            one.terms_.emplace(0, one_like());
            return one;
        }
        LaurentPoly base(*this);
        LaurentPoly acc;
        bool have = false;
        while (n > 0) {
            if (n & 1) {
                acc = have ? acc * base : base;
                have = true;
            }
            n >>= 1;
            if (n)
                base = base * base;
        }
        return acc;
    }

    std::string str(const std::string& var = "t") const
    {
        if (terms_.empty())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            std::ostringstream term;
            term << "(" << coeff_to_string(c) << ")";
            if (e != 0)
                term << "*" << var << "^" << e;
            if (!first)
                os << " + ";
            os << term.str();
            first = false;
        }
        return os.str();
    }

private:
    std::map<long, C> terms_;

    void require_nonzero() const
    {
        if (terms_.empty())
            throw std::domain_error("degree of the zero polynomial");
    }

    // CycInteger/CycRational carry a modulus, so zero/one values for sparse
    // access are derived from a stored coefficient's shape.
    C zero_like() const
    {
        if constexpr (std::is_same_v<C, Int> || std::is_same_v<C, Rat>) {
            return C(0);
        } else {
            require_nonzero();
            return C(terms_.begin()->second.modulus());
        }
    }
    C one_like() const
    {
        if constexpr (std::is_same_v<C, Int> || std::is_same_v<C, Rat>) {
            return C(1);
        } else {
            require_nonzero();
            return C(terms_.begin()->second.modulus(), 1);
        }
    }

    static std::string coeff_to_string(const Int& c)
    {
        std::ostringstream os;
        os << c;
        return os.str();
    }
    static std::string coeff_to_string(const Rat& c)
    {
        std::ostringstream os;
        os << c;
        return os.str();
    }
    static std::string coeff_to_string(const CycInteger& c) { return c.str(); }
    static std::string coeff_to_string(const CycRational& c) { return c.str(); }
};

// Exact quotient in the Laurent ring (the variable is a unit): returns q with
// f = q * g over the same coefficient ring, or empty when no such q exists.
// Implemented as long division over the fraction field followed by an
// integrality check of the quotient's coefficients.
template <class C>
std::optional<LaurentPoly<C>> laurent_exact_divide(const LaurentPoly<C>& f, const LaurentPoly<C>& g)
{
    using traits = coeff_traits<C>;
    using F = typename traits::fraction;
    if (g.is_zero())
        throw std::domain_error("division by the zero polynomial");
    if (f.is_zero())
        return LaurentPoly<C>();

    const long mf = f.min_exp();
    const long mg = g.min_exp();
    const long degF = f.max_exp() - mf;
    const long degG = g.max_exp() - mg;
    if (degF < degG)
        return std::nullopt;

    std::vector<F> rem(static_cast<size_t>(degF) + 1, traits::to_fraction(f.coeff(mf)));
    for (long e = 0; e <= degF; ++e)
        rem[static_cast<size_t>(e)] = traits::to_fraction(f.coeff(mf + e));
    std::vector<F> div(static_cast<size_t>(degG) + 1, traits::to_fraction(g.coeff(mg)));
    for (long e = 0; e <= degG; ++e)
        div[static_cast<size_t>(e)] = traits::to_fraction(g.coeff(mg + e));

    const F& lead = div[static_cast<size_t>(degG)];
    // Every slot is assigned in the loop; the fill value only fixes the shape.
    std::vector<F> quot(static_cast<size_t>(degF - degG) + 1, traits::to_fraction(f.coeff(mf)));
    for (long k = degF - degG; k >= 0; --k) {
        F qk = traits::frac_divide(rem[static_cast<size_t>(degG + k)], lead);
        quot[static_cast<size_t>(k)] = qk;
        if (traits::frac_is_zero(qk))
            continue;
        for (long j = 0; j <= degG; ++j)
            rem[static_cast<size_t>(j + k)] -= qk * div[static_cast<size_t>(j)];
    }
    for (const auto& r : rem)
        if (!traits::frac_is_zero(r))
            return std::nullopt;

    LaurentPoly<C> result;
    for (long k = 0; k <= degF - degG; ++k) {
        const F& q = quot[static_cast<size_t>(k)];
        if (traits::frac_is_zero(q))
            continue;
        auto back = traits::from_fraction(q);
        if (!back)
            return std::nullopt;
        result.add_term(k + (mf - mg), *back);
    }
    return result;
}

// Evaluate a cyclotomic Laurent polynomial at t = w^e (a unit, so negative
// exponents are fine).
inline CycInteger eval_at_root(const LaurentPoly<CycInteger>& f, long p, long e)
{
    CycInteger acc(p);
    for (const auto& [k, c] : f.terms())
        acc += c.rotated(mod_reduce(static_cast<long>((e % p) * (k % p)), p));
    return acc;
}

}  // namespace monopole
