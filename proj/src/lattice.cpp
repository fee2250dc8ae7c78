#include "monopole/lattice.hpp"

#include <cctype>
#include <sstream>

namespace monopole {

namespace {

constexpr std::array<BlockInfo, kBlockKinds> kBlocks = {{
    {2, 0, true, "H"},
    {8, 8, true, "E8p"},
    {8, -8, true, "E8m"},
    {1, 1, false, "D1p"},
    {1, -1, false, "D1m"},
}};

}  // namespace

const BlockInfo& block_info(Block b)
{
    return kBlocks[static_cast<std::size_t>(b)];
}

IntersectionLattice IntersectionLattice::single(Block b, long long count)
{
    IntersectionLattice L;
    L.add(b, count);
    return L;
}

IntersectionLattice& IntersectionLattice::add(Block b, long long count)
{
    if (count < 0)
        throw std::invalid_argument("negative block count");
    counts_[static_cast<std::size_t>(b)] += count;
    return *this;
}

long long IntersectionLattice::rank() const
{
    long long r = 0;
    for (std::size_t i = 0; i < kBlockKinds; ++i)
        r += counts_[i] * kBlocks[i].rank;
    return r;
}

long long IntersectionLattice::signature() const
{
    long long s = 0;
    for (std::size_t i = 0; i < kBlockKinds; ++i)
        s += counts_[i] * kBlocks[i].signature;
    return s;
}

bool IntersectionLattice::even() const
{
    for (std::size_t i = 0; i < kBlockKinds; ++i)
        if (counts_[i] > 0 && !kBlocks[i].even)
            return false;
    return true;
}

IntersectionLattice IntersectionLattice::connected_sum(const IntersectionLattice& o) const
{
    IntersectionLattice r(*this);
    for (std::size_t i = 0; i < kBlockKinds; ++i)
        r.counts_[i] += o.counts_[i];
    return r;
}

IntersectionLattice IntersectionLattice::parse(const std::string& expr)
{
    IntersectionLattice L;
    if (expr.empty() || expr == "0")
        return L;
    std::size_t pos = 0;
    while (true) {
        long long count = 1;
        bool have_digits = false;
        std::size_t term_start = pos;
        while (pos < expr.size() && std::isdigit(static_cast<unsigned char>(expr[pos]))) {
            if (!have_digits)
                count = 0;
            have_digits = true;
            count = count * 10 + (expr[pos] - '0');
            if (count > 1'000'000'000)
                throw ParseError("block count too large", term_start);
            ++pos;
        }
        bool matched = false;
        for (std::size_t i = 0; i < kBlockKinds; ++i) {
            const std::string code = kBlocks[i].code;
            if (expr.compare(pos, code.size(), code) == 0) {
                // "E8m" must win over a bare "E" prefix; codes are unambiguous
                // because none is a prefix of another.
                L.add(static_cast<Block>(i), count);
                pos += code.size();
                matched = true;
                break;
            }
        }
        if (!matched)
            throw ParseError("unknown block code", pos);
        if (pos == expr.size())
            break;
        if (expr[pos] != '+')
            throw ParseError("expected '+'", pos);
        ++pos;
        if (pos == expr.size())
            throw ParseError("dangling '+'", pos);
    }
    return L;
}

std::string IntersectionLattice::str() const
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < kBlockKinds; ++i) {
        if (counts_[i] == 0)
            continue;
        if (!first)
            os << "+";
        if (counts_[i] != 1)
            os << counts_[i];
        os << kBlocks[i].code;
        first = false;
    }
    return first ? "0" : os.str();
}

LatticeInvariants lattice_invariants(const IntersectionLattice& L)
{
    return LatticeInvariants{L.rank(), L.signature(), L.b_plus(), L.b_minus(), L.even()};
}

void SpinCData::validate(const IntersectionLattice& L) const
{
    if (is_spin) {
        if (!L.even())
            throw std::invalid_argument("spin characteristic requires an even lattice");
        if (c_squared != 0)
            throw std::invalid_argument("spin characteristic has c^2 = 0");
    }
    Int diff = c_squared - Int(static_cast<long>(L.signature()));
    if (diff % 8 != 0)
        throw std::invalid_argument("invalid characteristic: c^2 = sigma (mod 8) fails (c^2=" +
                                    c_squared.get_str() + ", sigma=" +
                                    std::to_string(L.signature()) + ")");
}

Int dirac_index(const IntersectionLattice& L, const SpinCData& s)
{
    s.validate(L);
    return (s.c_squared - Int(static_cast<long>(L.signature()))) / 8;
}

}  // namespace monopole
