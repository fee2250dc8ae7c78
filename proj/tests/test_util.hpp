#pragma once

#include <cstdlib>
#include <random>

namespace monopole::testing {

// Seeded from MONOPOLE_OBSTRUCT_SEED when set, so randomized property runs
// can be reproduced.
inline std::mt19937_64& rng()
{
    static std::mt19937_64 gen = [] {
        const char* s = std::getenv("MONOPOLE_OBSTRUCT_SEED");
        return std::mt19937_64(s ? std::strtoull(s, nullptr, 10) : 0x6d6f6e6f706f6cULL);
    }();
    return gen;
}

inline long rand_in(long lo, long hi)
{
    std::uniform_int_distribution<long> d(lo, hi);
    return d(rng());
}

}  // namespace monopole::testing
