#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

#include "monopole/numeric.hpp"

namespace monopole {

// Standard unimodular summands.  H is the hyperbolic plane, E8p/E8m the
// definite rank-8 even forms, D1p/D1m the odd rank-1 forms <+1>/<-1>.
enum class Block { H = 0, E8Plus, E8Minus, DiagPlus, DiagMinus };

inline constexpr std::size_t kBlockKinds = 5;

struct BlockInfo {
    long long rank;
    long long signature;
    bool even;
    const char* code;
};

const BlockInfo& block_info(Block b);

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::invalid_argument(message + " at position " + std::to_string(position)),
          position_(position)
    {
    }
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Block-sum description of a unimodular intersection form.
class IntersectionLattice {
public:
    IntersectionLattice() = default;

    static IntersectionLattice single(Block b, long long count = 1);
    // Grammar: lattice := term ('+' term)* ; term := [count] blockcode ;
    // blockcode := 'H' | 'E8p' | 'E8m' | 'D1p' | 'D1m'.  "0" or the empty
    // string denote the empty lattice.
    static IntersectionLattice parse(const std::string& expr);

    IntersectionLattice& add(Block b, long long count = 1);
    long long count(Block b) const { return counts_[static_cast<std::size_t>(b)]; }

    long long rank() const;
    long long signature() const;
    long long b_plus() const { return (rank() + signature()) / 2; }
    long long b_minus() const { return (rank() - signature()) / 2; }
    bool even() const;
    bool empty() const { return rank() == 0; }

    IntersectionLattice connected_sum(const IntersectionLattice& o) const;

    std::string str() const;

    bool operator==(const IntersectionLattice&) const = default;

private:
    std::array<long long, kBlockKinds> counts_{};
};

struct LatticeInvariants {
    long long rank;
    long long signature;
    long long b_plus;
    long long b_minus;
    bool even;
};

LatticeInvariants lattice_invariants(const IntersectionLattice& L);

// Characteristic data of a spin^c structure: only the self-intersection c^2
// of the characteristic element, plus the spin flag (c = 0).
struct SpinCData {
    Int c_squared = 0;
    bool is_spin = false;

    static SpinCData spin() { return SpinCData{Int(0), true}; }
    static SpinCData with_c_squared(Int c2) { return SpinCData{std::move(c2), false}; }

    // c^2 = sigma mod 8 (characteristic-vector congruence); spin requires an
    // even lattice and c^2 = 0.
    void validate(const IntersectionLattice& L) const;
};

// d = (c^2 - sigma)/8, an integer whenever the characteristic data validates.
Int dirac_index(const IntersectionLattice& L, const SpinCData& s);

}  // namespace monopole
