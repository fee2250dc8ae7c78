#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monopole/cyclotomic.hpp"
#include "monopole/laurent.hpp"

namespace monopole {

// Virtual representation of Z/p as an integer vector over the irreducible
// characters C_0..C_{p-1}, where the generator acts on C_j by w^j.
class ZpVirtualRep {
public:
    explicit ZpVirtualRep(long p);
    ZpVirtualRep(long p, std::vector<Int> mult);

    static ZpVirtualRep character(long p, long j, Int copies = 1);
    static ZpVirtualRep trivial(long p, Int copies) { return character(p, 0, std::move(copies)); }

    long modulus() const { return p_; }
    const std::vector<Int>& mult() const { return mult_; }
    Int dim() const;

    bool is_zero() const;
    bool is_genuine() const;         // all multiplicities nonnegative
    bool is_real_symmetric() const;  // mult[j] == mult[p-j]

    ZpVirtualRep operator-() const;
    ZpVirtualRep& operator+=(const ZpVirtualRep& o);
    ZpVirtualRep& operator-=(const ZpVirtualRep& o);
    ZpVirtualRep& operator*=(const ZpVirtualRep& o);  // group-ring convolution
    ZpVirtualRep& operator*=(const Int& s);
    friend ZpVirtualRep operator+(ZpVirtualRep a, const ZpVirtualRep& b) { return a += b; }
    friend ZpVirtualRep operator-(ZpVirtualRep a, const ZpVirtualRep& b) { return a -= b; }
    friend ZpVirtualRep operator*(ZpVirtualRep a, const ZpVirtualRep& b) { return a *= b; }
    friend ZpVirtualRep operator*(ZpVirtualRep a, const Int& s) { return a *= s; }

    bool operator==(const ZpVirtualRep& o) const { return p_ == o.p_ && mult_ == o.mult_; }
    bool operator!=(const ZpVirtualRep& o) const { return !(*this == o); }

    std::string str() const;

private:
    long p_;
    std::vector<Int> mult_;

    void check_same(const ZpVirtualRep& o) const;
};

// Total exterior power of a genuine representation: prod over lines of
// (1 + C_j).  Throws std::domain_error on virtual input.
ZpVirtualRep lambda_total(const ZpVirtualRep& r);

// Second Adams operation: C_j -> C_{2j mod p}, extended additively.
ZpVirtualRep psi2(const ZpVirtualRep& r);

// K-theoretic Euler class of a genuine representation: prod over lines of
// (1 - C_{p-j}) (each dual line contributes 1 minus itself).
ZpVirtualRep k_euler(const ZpVirtualRep& r);

// Character value at the k-th power of the generator, as an element of Z[w].
CycInteger character_at(const ZpVirtualRep& r, long k);

// Exact quotient in R[Z_p] = Z[t]/(t^p - 1): a solution q of q*b = a with
// integer coefficients, found through the circulant linear system.  Empty
// when no integral solution exists.
std::optional<ZpVirtualRep> repring_exact_divide(const ZpVirtualRep& a, const ZpVirtualRep& b);

// Element of R[Pin(2)] in its faithful encoding: the restriction to the
// circle (a symmetric Laurent polynomial in xi) together with the character
// value at j.  Basis elements: 1 -> (1, 1); 1_- -> (1, -1); mu_k for k >= 1
// -> (xi^k + xi^{-k}, 0).
class Pin2Element {
public:
    Pin2Element(LaurentPoly<Int> s1_restriction, Int trace_at_j);

    static Pin2Element zero();
    static Pin2Element one();
    static Pin2Element sign_rep();       // 1_-
    static Pin2Element mu(long k);       // k >= 1
    static Pin2Element from_coeffs(const Int& n_one, const Int& n_sign,
                                   const std::vector<Int>& mu_mult);

    const LaurentPoly<Int>& restriction() const { return restriction_; }
    const Int& trace_j() const { return trace_j_; }

    struct Coeffs {
        Int n_one;
        Int n_sign;
        std::vector<Int> mu_mult;  // mu_1, mu_2, ...
    };
    Coeffs decode() const;

    bool is_zero() const { return restriction_.is_zero() && trace_j_ == 0; }

    // Multiplication is componentwise in the encoding.
    Pin2Element& operator+=(const Pin2Element& o);
    Pin2Element& operator-=(const Pin2Element& o);
    Pin2Element& operator*=(const Pin2Element& o);
    friend Pin2Element operator+(Pin2Element a, const Pin2Element& b) { return a += b; }
    friend Pin2Element operator-(Pin2Element a, const Pin2Element& b) { return a -= b; }
    friend Pin2Element operator*(Pin2Element a, const Pin2Element& b) { return a *= b; }

    bool operator==(const Pin2Element& o) const
    {
        return restriction_ == o.restriction_ && trace_j_ == o.trace_j_;
    }
    bool operator!=(const Pin2Element& o) const { return !(*this == o); }

    // xi -> xi^2 on the restriction; the j-trace becomes the evaluation of
    // the restriction at xi = -1 (j^2 = -1 in the circle).
    Pin2Element psi2() const;

private:
    LaurentPoly<Int> restriction_;
    Int trace_j_;

    void validate() const;
};

inline Int trace_j(const Pin2Element& e)
{
    return e.trace_j();
}
inline const LaurentPoly<Int>& restrict_s1(const Pin2Element& e)
{
    return e.restriction();
}

// Virtual eigenspace dimensions of a lifted action on the index bundle D:
// d[j] is the dimension of the w^j eigenspace.
struct EquivariantIndexData {
    long p = 2;
    std::vector<long long> d;

    long long total() const;
    void validate() const;
};

}  // namespace monopole
