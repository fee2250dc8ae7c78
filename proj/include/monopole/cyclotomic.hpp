#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monopole/numeric.hpp"

namespace monopole {

// Element of Z[w], w = exp(2*pi*i/p) for a prime p, stored on the integral
// basis {1, w, ..., w^{p-2}}.  Any w^{p-1} arising in arithmetic is rewritten
// through 1 + w + ... + w^{p-1} = 0, so two values are equal exactly when
// their coefficient vectors are.  For p = 2 the type degenerates to plain
// integers (w = -1, basis {1}).
class CycInteger {
public:
    explicit CycInteger(long p);
    CycInteger(long p, Int constant);

    static CycInteger omega_power(long p, long k);
    // by_exponent has length p: coefficient of w^j at index j (reduced here).
    static CycInteger from_exponent_coeffs(long p, const std::vector<Int>& by_exponent);

    long modulus() const { return p_; }
    const std::vector<Int>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_integer() const;  // all nonconstant coefficients vanish

    CycInteger operator-() const;
    CycInteger& operator+=(const CycInteger& o);
    CycInteger& operator-=(const CycInteger& o);
    CycInteger& operator*=(const CycInteger& o);
    CycInteger& operator*=(const Int& s);

    friend CycInteger operator+(CycInteger a, const CycInteger& b) { return a += b; }
    friend CycInteger operator-(CycInteger a, const CycInteger& b) { return a -= b; }
    friend CycInteger operator*(CycInteger a, const CycInteger& b) { return a *= b; }
    friend CycInteger operator*(CycInteger a, const Int& s) { return a *= s; }

    bool operator==(const CycInteger& o) const;
    bool operator!=(const CycInteger& o) const { return !(*this == o); }

    // Multiply by w^k (a basis rotation; far cheaper than a general product).
    CycInteger rotated(long k) const;

    std::string str() const;

private:
    long p_ = 2;
    std::vector<Int> c_;  // length p-1

    void check_same_modulus(const CycInteger& o) const;
};

// Same ring with rational coefficients: the field Q(w).  Used as the fraction
// field in exact-division routines.
class CycRational {
public:
    explicit CycRational(long p);
    CycRational(long p, Rat constant);
    explicit CycRational(const CycInteger& z);

    long modulus() const { return p_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_integral() const;  // every coefficient has denominator 1
    CycInteger to_integer() const;

    CycRational operator-() const;
    CycRational& operator+=(const CycRational& o);
    CycRational& operator-=(const CycRational& o);
    CycRational& operator*=(const CycRational& o);
    CycRational& operator*=(const Rat& s);

    friend CycRational operator+(CycRational a, const CycRational& b) { return a += b; }
    friend CycRational operator-(CycRational a, const CycRational& b) { return a -= b; }
    friend CycRational operator*(CycRational a, const CycRational& b) { return a *= b; }

    CycRational inverse() const;  // throws std::domain_error on zero
    friend CycRational operator/(const CycRational& a, const CycRational& b)
    {
        return a * b.inverse();
    }

    bool operator==(const CycRational& o) const;
    bool operator!=(const CycRational& o) const { return !(*this == o); }

    std::string str() const;

private:
    long p_ = 2;
    std::vector<Rat> c_;

    void check_same_modulus(const CycRational& o) const;
};

// Exact quotient a/b in Z[w]; empty when b does not divide a.
std::optional<CycInteger> cyc_exact_divide(const CycInteger& a, const CycInteger& b);

}  // namespace monopole
