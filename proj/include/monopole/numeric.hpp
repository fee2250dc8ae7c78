#pragma once

#include <gmpxx.h>

namespace monopole {

using Int = mpz_class;
using Rat = mpq_class;

// C(n,k) mod 2 by the Lucas rule: nonzero exactly when the bits of k are a
// subset of the bits of n.
inline int binomial_mod2(unsigned long long n, unsigned long long k)
{
    return ((n & k) == k) ? 1 : 0;
}

inline bool is_prime(long n)
{
    if (n < 2)
        return false;
    for (long q = 2; q * q <= n; ++q)
        if (n % q == 0)
            return false;
    return true;
}

// Nonnegative remainder of a mod m (m > 0).
inline long mod_reduce(long a, long m)
{
    long r = a % m;
    return r < 0 ? r + m : r;
}

// gmpxx has no long long constructor; 64-bit long makes this lossless here.
inline Int to_int(long long v)
{
    return Int(static_cast<long>(v));
}

}  // namespace monopole
