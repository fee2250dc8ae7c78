#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "monopole/lattice.hpp"
#include "test_util.hpp"

using namespace monopole;
using monopole::testing::rand_in;

namespace {

IntersectionLattice random_lattice()
{
    IntersectionLattice L;
    for (std::size_t i = 0; i < kBlockKinds; ++i)
        L.add(static_cast<Block>(i), rand_in(0, 4));
    return L;
}

}  // namespace

TEST_CASE("block invariants")
{
    auto L = IntersectionLattice::single(Block::H, 2).add(Block::E8Minus, 2);
    auto inv = lattice_invariants(L);
    CHECK(inv.rank == 20);
    CHECK(inv.signature == -16);
    CHECK(inv.b_plus == 2);
    CHECK(inv.b_minus == 18);
    CHECK(inv.even);

    auto e8 = lattice_invariants(IntersectionLattice::single(Block::E8Minus));
    CHECK(e8.rank == 8);
    CHECK(e8.signature == -8);
    CHECK(e8.b_plus == 0);
    CHECK(e8.even);

    auto empty = lattice_invariants(IntersectionLattice{});
    CHECK(empty.rank == 0);
    CHECK(empty.signature == 0);
    CHECK(empty.b_plus == 0);
    CHECK(empty.even);
}

TEST_CASE("parity and congruences on random lattices")
{
    for (int trial = 0; trial < 200; ++trial) {
        auto L = random_lattice();
        CHECK((L.rank() - L.signature()) % 2 == 0);
        CHECK(L.b_plus() >= 0);
        CHECK(L.b_minus() >= 0);
        if (L.even())
            CHECK(L.signature() % 8 == 0);
        bool has_diag = L.count(Block::DiagPlus) > 0 || L.count(Block::DiagMinus) > 0;
        CHECK(L.even() == !has_diag);
    }
}

TEST_CASE("dirac index examples")
{
    auto L1 = IntersectionLattice::single(Block::H, 10).add(Block::E8Minus, 6);
    CHECK(dirac_index(L1, SpinCData::spin()) == 6);

    for (long n : {1L, 4L, 8L, 13L}) {
        auto L = IntersectionLattice::single(Block::DiagMinus, n);
        CHECK(dirac_index(L, SpinCData::with_c_squared(Int(-n))) == 0);
    }

    auto L2 = IntersectionLattice::single(Block::H, 2).add(Block::E8Minus, 2);
    CHECK(dirac_index(L2, SpinCData::spin()) == 2);
}

TEST_CASE("characteristic validation")
{
    auto diag = IntersectionLattice::single(Block::DiagMinus, 8);
    CHECK_THROWS_AS(SpinCData::spin().validate(diag), std::invalid_argument);
    CHECK_THROWS_AS(SpinCData::with_c_squared(Int(1)).validate(diag), std::invalid_argument);
    CHECK_NOTHROW(SpinCData::with_c_squared(Int(-8)).validate(diag));
    CHECK_NOTHROW(SpinCData::with_c_squared(Int(0)).validate(diag));  // c^2=0=sigma mod 8

    for (int trial = 0; trial < 50; ++trial) {
        auto L = random_lattice();
        if (L.even())
            CHECK_NOTHROW(SpinCData::spin().validate(L));
        else
            CHECK_THROWS_AS(SpinCData::spin().validate(L), std::invalid_argument);
    }
}

TEST_CASE("connected sum")
{
    auto A = IntersectionLattice::single(Block::H, 10);
    auto B = IntersectionLattice::single(Block::E8Minus, 6);
    auto X = A.connected_sum(B);
    CHECK(X.count(Block::H) == 10);
    CHECK(X.count(Block::E8Minus) == 6);
    CHECK(X == IntersectionLattice::parse("10H+6E8m"));

    CHECK(A.connected_sum(IntersectionLattice{}) == A);

    auto HH = IntersectionLattice::single(Block::H).connected_sum(
        IntersectionLattice::single(Block::H));
    CHECK(HH.signature() == 0);
    CHECK(HH.b_plus() == 2);

    // Additivity of the index when c^2 adds.
    for (int trial = 0; trial < 50; ++trial) {
        auto L1 = random_lattice();
        auto L2 = random_lattice();
        Int c1 = Int(static_cast<long>(L1.signature())) + 8 * rand_in(-3, 3);
        Int c2 = Int(static_cast<long>(L2.signature())) + 8 * rand_in(-3, 3);
        Int d1 = dirac_index(L1, SpinCData::with_c_squared(c1));
        Int d2 = dirac_index(L2, SpinCData::with_c_squared(c2));
        CHECK(dirac_index(L1.connected_sum(L2), SpinCData::with_c_squared(c1 + c2)) == d1 + d2);
    }
}

TEST_CASE("lattice grammar")
{
    CHECK(IntersectionLattice::parse("10H+6E8m+3D1p") ==
          IntersectionLattice::single(Block::H, 10)
              .add(Block::E8Minus, 6)
              .add(Block::DiagPlus, 3));
    CHECK(IntersectionLattice::parse("E8m") == IntersectionLattice::single(Block::E8Minus));
    CHECK(IntersectionLattice::parse("2H+2E8m").str() == "2H+2E8m");
    CHECK(IntersectionLattice::parse("H").str() == "H");
    CHECK(IntersectionLattice::parse("0").str() == "0");
    CHECK(IntersectionLattice::parse("").empty());
    CHECK(IntersectionLattice::parse("1H+1H") == IntersectionLattice::single(Block::H, 2));

    CHECK_THROWS_AS(IntersectionLattice::parse("3Q"), ParseError);
    CHECK_THROWS_AS(IntersectionLattice::parse("2H+"), ParseError);
    CHECK_THROWS_AS(IntersectionLattice::parse("H++H"), ParseError);
    CHECK_THROWS_AS(IntersectionLattice::parse("E8"), ParseError);
    try {
        IntersectionLattice::parse("2H+4X1");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }

    // Round trip through str().
    for (int trial = 0; trial < 50; ++trial) {
        auto L = random_lattice();
        CHECK(IntersectionLattice::parse(L.str()) == L);
    }
}
