#include "monopole/cyclotomic.hpp"

#include <sstream>
#include <stdexcept>

#include "monopole/intlinalg.hpp"

namespace monopole {

namespace {

void require_prime(long p)
{
    if (!is_prime(p))
        throw std::invalid_argument("cyclotomic modulus must be prime, got " + std::to_string(p));
}

// Accumulate c * w^e (0 <= e <= p-1) onto a length-(p-1) coefficient vector,
// rewriting w^{p-1} = -(1 + w + ... + w^{p-2}).
template <class T>
void add_power(std::vector<T>& out, long p, long e, const T& c)
{
    if (e <= p - 2) {
        out[static_cast<size_t>(e)] += c;
    } else {
        for (auto& x : out)
            x -= c;
    }
}

template <class T>
std::string coeff_str(const std::vector<T>& c)
{
    std::ostringstream os;
    bool first = true;
    for (size_t j = 0; j < c.size(); ++j) {
        if (c[j] == 0)
            continue;
        std::ostringstream term;
        if (j == 0) {
            term << c[j];
        } else {
            if (c[j] == 1)
                ;
            else if (c[j] == -1)
                term << "-";
            else
                term << c[j] << "*";
            term << "w";
            if (j > 1)
                term << "^" << j;
        }
        std::string s = term.str();
        if (!first && !s.empty() && s[0] != '-')
            os << "+";
        os << s;
        first = false;
    }
    return first ? "0" : os.str();
}

}  // namespace

CycInteger::CycInteger(long p) : p_(p), c_(static_cast<size_t>(p - 1), Int(0))
{
    require_prime(p);
}

CycInteger::CycInteger(long p, Int constant) : CycInteger(p)
{
    c_[0] = std::move(constant);
}

CycInteger CycInteger::omega_power(long p, long k)
{
    CycInteger r(p);
    add_power(r.c_, p, mod_reduce(k, p), Int(1));
    return r;
}

CycInteger CycInteger::from_exponent_coeffs(long p, const std::vector<Int>& by_exponent)
{
    if (by_exponent.size() != static_cast<size_t>(p))
        throw std::invalid_argument("expected one coefficient per exponent 0..p-1");
    CycInteger r(p);
    for (long e = 0; e < p; ++e)
        add_power(r.c_, p, e, by_exponent[static_cast<size_t>(e)]);
    return r;
}

bool CycInteger::is_zero() const
{
    for (const auto& x : c_)
        if (x != 0)
            return false;
    return true;
}

bool CycInteger::is_integer() const
{
    for (size_t j = 1; j < c_.size(); ++j)
        if (c_[j] != 0)
            return false;
    return true;
}

void CycInteger::check_same_modulus(const CycInteger& o) const
{
    if (p_ != o.p_)
        throw std::domain_error("cyclotomic modulus mismatch: " + std::to_string(p_) + " vs " +
                                std::to_string(o.p_));
}

CycInteger CycInteger::operator-() const
{
    CycInteger r(*this);
    for (auto& x : r.c_)
        x = -x;
    return r;
}

CycInteger& CycInteger::operator+=(const CycInteger& o)
{
    check_same_modulus(o);
    for (size_t j = 0; j < c_.size(); ++j)
        c_[j] += o.c_[j];
    return *this;
}

CycInteger& CycInteger::operator-=(const CycInteger& o)
{
    check_same_modulus(o);
    for (size_t j = 0; j < c_.size(); ++j)
        c_[j] -= o.c_[j];
    return *this;
}

CycInteger& CycInteger::operator*=(const CycInteger& o)
{
    check_same_modulus(o);
    const size_t n = c_.size();
    std::vector<Int> conv(2 * n - 1, Int(0));
    for (size_t i = 0; i < n; ++i) {
        if (c_[i] == 0)
            continue;
        for (size_t j = 0; j < n; ++j) {
            if (o.c_[j] == 0)
                continue;
            conv[i + j] += c_[i] * o.c_[j];
        }
    }
    std::vector<Int> out(n, Int(0));
    for (size_t e = 0; e < conv.size(); ++e) {
        if (conv[e] == 0)
            continue;
        add_power(out, p_, mod_reduce(static_cast<long>(e), p_), conv[e]);
    }
    c_ = std::move(out);
    return *this;
}

CycInteger& CycInteger::operator*=(const Int& s)
{
    for (auto& x : c_)
        x *= s;
    return *this;
}

bool CycInteger::operator==(const CycInteger& o) const
{
    return p_ == o.p_ && c_ == o.c_;
}

CycInteger CycInteger::rotated(long k) const
{
    CycInteger r(p_);
    const long e0 = mod_reduce(k, p_);
    for (size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0)
            continue;
        add_power(r.c_, p_, mod_reduce(static_cast<long>(j) + e0, p_), c_[j]);
    }
    return r;
}

std::string CycInteger::str() const
{
    return coeff_str(c_);
}

CycRational::CycRational(long p) : p_(p), c_(static_cast<size_t>(p - 1), Rat(0))
{
    require_prime(p);
}

CycRational::CycRational(long p, Rat constant) : CycRational(p)
{
    c_[0] = std::move(constant);
}

CycRational::CycRational(const CycInteger& z) : CycRational(z.modulus())
{
    for (size_t j = 0; j < c_.size(); ++j)
        c_[j] = Rat(z.coeffs()[j]);
}

bool CycRational::is_zero() const
{
    for (const auto& x : c_)
        if (x != 0)
            return false;
    return true;
}

bool CycRational::is_integral() const
{
    for (const auto& x : c_)
        if (x.get_den() != 1)
            return false;
    return true;
}

CycInteger CycRational::to_integer() const
{
    if (!is_integral())
        throw std::domain_error("cyclotomic value is not integral");
    std::vector<Int> by_exp(static_cast<size_t>(p_), Int(0));
    for (size_t j = 0; j < c_.size(); ++j)
        by_exp[j] = Int(c_[j].get_num());
    return CycInteger::from_exponent_coeffs(p_, by_exp);
}

void CycRational::check_same_modulus(const CycRational& o) const
{
    if (p_ != o.p_)
        throw std::domain_error("cyclotomic modulus mismatch: " + std::to_string(p_) + " vs " +
                                std::to_string(o.p_));
}

CycRational CycRational::operator-() const
{
    CycRational r(*this);
    for (auto& x : r.c_)
        x = -x;
    return r;
}

CycRational& CycRational::operator+=(const CycRational& o)
{
    check_same_modulus(o);
    for (size_t j = 0; j < c_.size(); ++j)
        c_[j] += o.c_[j];
    return *this;
}

CycRational& CycRational::operator-=(const CycRational& o)
{
    check_same_modulus(o);
    for (size_t j = 0; j < c_.size(); ++j)
        c_[j] -= o.c_[j];
    return *this;
}

CycRational& CycRational::operator*=(const CycRational& o)
{
    check_same_modulus(o);
    const size_t n = c_.size();
    std::vector<Rat> conv(2 * n - 1, Rat(0));
    for (size_t i = 0; i < n; ++i) {
        if (c_[i] == 0)
            continue;
        for (size_t j = 0; j < n; ++j) {
            if (o.c_[j] == 0)
                continue;
            conv[i + j] += c_[i] * o.c_[j];
        }
    }
    std::vector<Rat> out(n, Rat(0));
    for (size_t e = 0; e < conv.size(); ++e) {
        if (conv[e] == 0)
            continue;
        add_power(out, p_, mod_reduce(static_cast<long>(e), p_), conv[e]);
    }
    c_ = std::move(out);
    return *this;
}

CycRational& CycRational::operator*=(const Rat& s)
{
    for (auto& x : c_)
        x *= s;
    return *this;
}

bool CycRational::operator==(const CycRational& o) const
{
    return p_ == o.p_ && c_ == o.c_;
}

CycRational CycRational::inverse() const
{
    if (is_zero())
        throw std::domain_error("division by zero in Q(w)");
    const size_t n = c_.size();
    // Column j of M holds the coordinates of (*this) * w^j; the inverse is the
    // solution of M x = e_0.
    MatQ M(n, std::vector<Rat>(n, Rat(0)));
    CycRational wj(*this);
    for (size_t j = 0; j < n; ++j) {
        for (size_t i = 0; i < n; ++i)
            M[i][j] = wj.c_[i];
        if (j + 1 < n)
            wj *= CycRational(CycInteger::omega_power(p_, 1));
    }
    std::vector<Rat> rhs(n, Rat(0));
    rhs[0] = 1;
    auto x = solve_rational(std::move(M), std::move(rhs));
    if (!x)
        throw std::domain_error("cyclotomic inverse does not exist");  // impossible in a field
    CycRational r(p_);
    r.c_ = std::move(*x);
    return r;
}

std::string CycRational::str() const
{
    return coeff_str(c_);
}

std::optional<CycInteger> cyc_exact_divide(const CycInteger& a, const CycInteger& b)
{
    if (b.is_zero())
        throw std::domain_error("division by zero in Z[w]");
    const long p = a.modulus();
    if (p != b.modulus())
        throw std::domain_error("cyclotomic modulus mismatch");
    const size_t n = a.coeffs().size();
    MatZ M(n, std::vector<Int>(n, Int(0)));
    CycInteger wj(b);
    for (size_t j = 0; j < n; ++j) {
        for (size_t i = 0; i < n; ++i)
            M[i][j] = wj.coeffs()[i];
        if (j + 1 < n)
            wj = wj.rotated(1);
    }
    auto x = solve_integer(std::move(M), a.coeffs());
    if (!x)
        return std::nullopt;
    std::vector<Int> by_exp(static_cast<size_t>(p), Int(0));
    for (size_t j = 0; j < n; ++j)
        by_exp[j] = (*x)[j];
    return CycInteger::from_exponent_coeffs(p, by_exp);
}

}  // namespace monopole
