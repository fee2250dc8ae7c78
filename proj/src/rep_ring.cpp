#include "monopole/rep_ring.hpp"

#include <sstream>
#include <stdexcept>

#include "monopole/intlinalg.hpp"

namespace monopole {

ZpVirtualRep::ZpVirtualRep(long p) : p_(p), mult_(static_cast<size_t>(p), Int(0))
{
    if (!is_prime(p))
        throw std::invalid_argument("group order must be prime, got " + std::to_string(p));
}

ZpVirtualRep::ZpVirtualRep(long p, std::vector<Int> mult) : ZpVirtualRep(p)
{
    if (mult.size() != static_cast<size_t>(p))
        throw std::invalid_argument("expected one multiplicity per character");
    mult_ = std::move(mult);
}

ZpVirtualRep ZpVirtualRep::character(long p, long j, Int copies)
{
    ZpVirtualRep r(p);
    r.mult_[static_cast<size_t>(mod_reduce(j, p))] = std::move(copies);
    return r;
}

Int ZpVirtualRep::dim() const
{
    Int d = 0;
    for (const auto& m : mult_)
        d += m;
    return d;
}

bool ZpVirtualRep::is_zero() const
{
    for (const auto& m : mult_)
        if (m != 0)
            return false;
    return true;
}

bool ZpVirtualRep::is_genuine() const
{
    for (const auto& m : mult_)
        if (m < 0)
            return false;
    return true;
}

bool ZpVirtualRep::is_real_symmetric() const
{
    for (long j = 1; j < p_; ++j)
        if (mult_[static_cast<size_t>(j)] != mult_[static_cast<size_t>(p_ - j)])
            return false;
    return true;
}

void ZpVirtualRep::check_same(const ZpVirtualRep& o) const
{
    if (p_ != o.p_)
        throw std::domain_error("representation group order mismatch");
}

ZpVirtualRep ZpVirtualRep::operator-() const
{
    ZpVirtualRep r(p_);
    for (size_t j = 0; j < mult_.size(); ++j)
        r.mult_[j] = -mult_[j];
    return r;
}

ZpVirtualRep& ZpVirtualRep::operator+=(const ZpVirtualRep& o)
{
    check_same(o);
    for (size_t j = 0; j < mult_.size(); ++j)
        mult_[j] += o.mult_[j];
    return *this;
}

ZpVirtualRep& ZpVirtualRep::operator-=(const ZpVirtualRep& o)
{
    check_same(o);
    for (size_t j = 0; j < mult_.size(); ++j)
        mult_[j] -= o.mult_[j];
    return *this;
}

ZpVirtualRep& ZpVirtualRep::operator*=(const ZpVirtualRep& o)
{
    check_same(o);
    std::vector<Int> out(mult_.size(), Int(0));
    for (size_t i = 0; i < mult_.size(); ++i) {
        if (mult_[i] == 0)
            continue;
        for (size_t j = 0; j < mult_.size(); ++j) {
            if (o.mult_[j] == 0)
                continue;
            out[(i + j) % mult_.size()] += mult_[i] * o.mult_[j];
        }
    }
    mult_ = std::move(out);
    return *this;
}

ZpVirtualRep& ZpVirtualRep::operator*=(const Int& s)
{
    for (auto& m : mult_)
        m *= s;
    return *this;
}

std::string ZpVirtualRep::str() const
{
    std::ostringstream os;
    bool first = true;
    for (size_t j = 0; j < mult_.size(); ++j) {
        if (mult_[j] == 0)
            continue;
        if (!first)
            os << " + ";
        if (j == 0) {
            os << mult_[j];
        } else {
            if (mult_[j] != 1)
                os << mult_[j] << "*";
            os << "C" << j;
        }
        first = false;
    }
    return first ? "0" : os.str();
}

ZpVirtualRep lambda_total(const ZpVirtualRep& r)
{
    if (!r.is_genuine())
        throw std::domain_error("total exterior power needs a genuine representation");
    const long p = r.modulus();
    ZpVirtualRep acc = ZpVirtualRep::trivial(p, 1);
    for (long j = 0; j < p; ++j) {
        const Int& m = r.mult()[static_cast<size_t>(j)];
        if (m == 0)
            continue;
        ZpVirtualRep line = ZpVirtualRep::trivial(p, 1) + ZpVirtualRep::character(p, j);
        // (1 + C_j)^m by binary powering on the exponent.
        ZpVirtualRep base = line;
        Int n = m;
        while (n > 0) {
            if (mpz_odd_p(n.get_mpz_t()))
                acc *= base;
            n >>= 1;
            if (n > 0)
                base *= base;
        }
    }
    return acc;
}

ZpVirtualRep psi2(const ZpVirtualRep& r)
{
    const long p = r.modulus();
    ZpVirtualRep out(p);
    for (long j = 0; j < p; ++j)
        out += ZpVirtualRep::character(p, mod_reduce(2 * j, p), r.mult()[static_cast<size_t>(j)]);
    return out;
}

ZpVirtualRep k_euler(const ZpVirtualRep& r)
{
    if (!r.is_genuine())
        throw std::domain_error("K-theoretic Euler class needs a genuine representation");
    const long p = r.modulus();
    ZpVirtualRep acc = ZpVirtualRep::trivial(p, 1);
    for (long j = 0; j < p; ++j) {
        const Int& m = r.mult()[static_cast<size_t>(j)];
        if (m == 0)
            continue;
        ZpVirtualRep factor =
            ZpVirtualRep::trivial(p, 1) - ZpVirtualRep::character(p, mod_reduce(p - j, p));
        ZpVirtualRep base = factor;
        Int n = m;
        while (n > 0) {
            if (mpz_odd_p(n.get_mpz_t()))
                acc *= base;
            n >>= 1;
            if (n > 0)
                base *= base;
        }
    }
    return acc;
}

CycInteger character_at(const ZpVirtualRep& r, long k)
{
    const long p = r.modulus();
    std::vector<Int> by_exp(static_cast<size_t>(p), Int(0));
    for (long j = 0; j < p; ++j)
        by_exp[static_cast<size_t>(mod_reduce(j * k, p))] += r.mult()[static_cast<size_t>(j)];
    return CycInteger::from_exponent_coeffs(p, by_exp);
}

std::optional<ZpVirtualRep> repring_exact_divide(const ZpVirtualRep& a, const ZpVirtualRep& b)
{
    if (a.modulus() != b.modulus())
        throw std::domain_error("representation group order mismatch");
    if (b.is_zero())
        throw std::domain_error("division by zero in R[Z_p]");
    const size_t p = static_cast<size_t>(a.modulus());
    // (q * b)[k] = sum_i q[i] b[k-i]: a circulant system in q.
    MatZ M(p, std::vector<Int>(p));
    for (size_t k = 0; k < p; ++k)
        for (size_t i = 0; i < p; ++i)
            M[k][i] = b.mult()[(k + p - i) % p];
    auto q = solve_integer(std::move(M), a.mult());
    if (!q)
        return std::nullopt;
    return ZpVirtualRep(a.modulus(), std::move(*q));
}

Pin2Element::Pin2Element(LaurentPoly<Int> s1_restriction, Int trace_at_j)
    : restriction_(std::move(s1_restriction)), trace_j_(std::move(trace_at_j))
{
    validate();
}

void Pin2Element::validate() const
{
    for (const auto& [e, c] : restriction_.terms())
        if (restriction_.coeff(-e) != c)
            throw std::invalid_argument("circle restriction must be symmetric under xi <-> 1/xi");
    Int parity = restriction_.coeff(0) - trace_j_;
    if (parity % 2 != 0)
        throw std::invalid_argument(
            "constant term of the restriction and the j-trace must agree mod 2");
}

Pin2Element Pin2Element::zero()
{
    return Pin2Element(LaurentPoly<Int>(), Int(0));
}

Pin2Element Pin2Element::one()
{
    return Pin2Element(LaurentPoly<Int>::constant(1), Int(1));
}

Pin2Element Pin2Element::sign_rep()
{
    return Pin2Element(LaurentPoly<Int>::constant(1), Int(-1));
}

Pin2Element Pin2Element::mu(long k)
{
    if (k < 1)
        throw std::invalid_argument("mu_k requires k >= 1");
    LaurentPoly<Int> r;
    r.add_term(k, 1);
    r.add_term(-k, 1);
    return Pin2Element(std::move(r), Int(0));
}

Pin2Element Pin2Element::from_coeffs(const Int& n_one, const Int& n_sign,
                                     const std::vector<Int>& mu_mult)
{
    LaurentPoly<Int> r;
    r.add_term(0, n_one + n_sign);
    for (size_t k = 0; k < mu_mult.size(); ++k) {
        r.add_term(static_cast<long>(k) + 1, mu_mult[k]);
        r.add_term(-(static_cast<long>(k) + 1), mu_mult[k]);
    }
    return Pin2Element(std::move(r), n_one - n_sign);
}

Pin2Element::Coeffs Pin2Element::decode() const
{
    Coeffs c;
    long top = restriction_.is_zero() ? 0 : restriction_.max_exp();
    c.mu_mult.resize(static_cast<size_t>(top > 0 ? top : 0), Int(0));
    for (long k = 1; k <= top; ++k)
        c.mu_mult[static_cast<size_t>(k - 1)] = restriction_.coeff(k);
    c.n_one = (restriction_.coeff(0) + trace_j_) / 2;
    c.n_sign = (restriction_.coeff(0) - trace_j_) / 2;
    return c;
}

Pin2Element& Pin2Element::operator+=(const Pin2Element& o)
{
    restriction_ += o.restriction_;
    trace_j_ += o.trace_j_;
    return *this;
}

Pin2Element& Pin2Element::operator-=(const Pin2Element& o)
{
    restriction_ -= o.restriction_;
    trace_j_ -= o.trace_j_;
    return *this;
}

Pin2Element& Pin2Element::operator*=(const Pin2Element& o)
{
    restriction_ *= o.restriction_;
    trace_j_ *= o.trace_j_;
    return *this;
}

Pin2Element Pin2Element::psi2() const
{
    LaurentPoly<Int> squared;
    for (const auto& [e, c] : restriction_.terms())
        squared.add_term(2 * e, c);
    Int at_minus_one = 0;
    for (const auto& [e, c] : restriction_.terms())
        at_minus_one += (e % 2 == 0) ? c : -c;
    return Pin2Element(std::move(squared), at_minus_one);
}

long long EquivariantIndexData::total() const
{
    long long t = 0;
    for (long long x : d)
        t += x;
    return t;
}

void EquivariantIndexData::validate() const
{
    if (!is_prime(p))
        throw std::invalid_argument("group order must be prime");
    if (d.size() != static_cast<size_t>(p))
        throw std::invalid_argument("expected one virtual eigenspace dimension per character");
}

}  // namespace monopole
