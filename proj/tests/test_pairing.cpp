#include <gtest/gtest.h>

#include <kframe/pairing.hpp>
#include <kframe/random.hpp>

#include "oracles.hpp"

using namespace kframe;

namespace
{

HomTensor term(const Space &sp, int f, int x, int y, long long c = 1)
{
    HomTensor t(sp);
    t.add_term({f, x, y}, sp.integer(c));
    return t;
}

HVec random_h(const Space &sp, Rng &rng)
{
    HVec v(sp);
    for (int i = 0; i < sp.dim(); ++i) {
        v[i] = sp.integer(rng.uniform(-4, 4));
    }
    return v;
}

} // namespace

TEST(Flat, Examples)
{
    SurfaceSig sig{2, 1};
    Space sp{sig, RingSpec::integers()};
    auto e = [&](int gen) { return HVec::basis(sp, gen); };
    EXPECT_EQ(flat(e(sig.a(1)), e(sig.b(1))), sp.one());
    EXPECT_EQ(flat(e(sig.b(1)), e(sig.a(1))), sp.integer(-1));
    EXPECT_EQ(flat(e(sig.a(1)), e(sig.a(2))), sp.zero());
    EXPECT_EQ(flat(e(sig.a(1)), e(sig.b(2))), sp.zero());
    EXPECT_EQ(flat(e(sig.d(1)), e(sig.a(1))), sp.zero());
    EXPECT_THROW(flat(e(0), HVec::basis(Space{sig, RingSpec::rationals()}, 0)), RingMismatch);
}

TEST(Flat, MatchesGramOracle)
{
    Rng rng(2);
    SurfaceSig sig{3, 2};
    Space sp{sig, RingSpec::integers()};
    for (int k = 0; k < 100; ++k) {
        HVec x = random_h(sp, rng), y = random_h(sp, rng);
        BigInt s = 0;
        for (int i = 0; i < sp.dim(); ++i) {
            for (int j = 0; j < sp.dim(); ++j) {
                s += x[i].num() * y[j].num() * oracle::gram(sig, i, j);
            }
        }
        EXPECT_EQ(flat(x, y), Scalar::from_integer(sp.ring, s));
    }
}

TEST(Jmath, Examples)
{
    SurfaceSig sig{1, 1};
    Space sp{sig, RingSpec::integers()};
    EXPECT_EQ(jmath(HVec::basis(sp, sig.a(1))), DualVec::basis(sp, sig.b(1)));
    EXPECT_EQ(jmath(HVec::basis(sp, sig.b(1))), DualVec::basis(sp, sig.a(1), -1));
    EXPECT_TRUE(jmath(HVec::basis(sp, sig.d(1))).is_zero());
    EXPECT_EQ(jmath(HVec::basis(sp, sig.b(1))).to_string(), "-A1*");
}

TEST(Jmath, IsPairingWithFirstSlot)
{
    Rng rng(4);
    for (const auto &r : {RingSpec::integers(), RingSpec::mod(6)}) {
        Space sp{SurfaceSig{3, 1}, r};
        for (int k = 0; k < 100; ++k) {
            HVec x = random_h(sp, rng), y = random_h(sp, rng);
            EXPECT_EQ(pair(jmath(x), y), flat(x, y));
        }
    }
}

TEST(Contract, Examples)
{
    SurfaceSig sig{2, 0};
    Space sp{sig, RingSpec::integers()};
    int A1 = sig.a(1), B1 = sig.b(1), B2 = sig.b(2);
    EXPECT_EQ(contract(term(sp, A1, A1, B2)), HVec::basis(sp, B2));
    EXPECT_TRUE(contract(term(sp, A1, B1, B2)).is_zero());
    EXPECT_EQ(contract(term(sp, A1, A1, B1) + term(sp, A1, B1, A1)), HVec::basis(sp, B1));

    EXPECT_EQ(contract_switched(term(sp, A1, B2, A1)), HVec::basis(sp, B2));
    EXPECT_TRUE(contract_switched(term(sp, A1, A1, B2)).is_zero());
    EXPECT_EQ(contract_switched(term(sp, A1, A1, A1)), HVec::basis(sp, A1));
}

TEST(OneTensorFlat, Examples)
{
    SurfaceSig sig{1, 0};
    Space sp{sig, RingSpec::integers()};
    int A1 = sig.a(1), B1 = sig.b(1);
    EXPECT_EQ(one_tensor_flat(term(sp, B1, A1, B1)), DualVec::basis(sp, B1));
    EXPECT_TRUE(one_tensor_flat(term(sp, B1, A1, A1)).is_zero());
    EXPECT_TRUE(one_tensor_flat(term(sp, B1, A1, B1) + term(sp, B1, B1, A1)).is_zero());
}

TEST(FlatProperties, SkewAndNondegenerate)
{
    Rng rng(9);
    for (const auto &r : {RingSpec::integers(), RingSpec::mod(2), RingSpec::mod(5)}) {
        Space sp{SurfaceSig{3, 2}, r};
        for (int k = 0; k < 100; ++k) {
            HVec x = random_h(sp, rng), y = random_h(sp, rng);
            EXPECT_EQ(flat(x, y), -flat(y, x));
            EXPECT_TRUE((flat(x, x) + flat(x, x)).is_zero());
            if (r.characteristic() != 2) {
                EXPECT_TRUE(flat(x, x).is_zero());
            }
        }
    }
    // Gram matrix on A_1..A_g, B_1..B_g is [[0, I], [-I, 0]], determinant 1.
    SurfaceSig sig{3, 0};
    Space sp{sig, RingSpec::integers()};
    for (int i = 0; i < 6; ++i) {
        int nonzero = 0;
        for (int j = 0; j < 6; ++j) {
            nonzero += !flat(HVec::basis(sp, i), HVec::basis(sp, j)).is_zero();
        }
        EXPECT_EQ(nonzero, 1);
    }
    for (int i = 1; i <= 3; ++i) {
        EXPECT_EQ(jmath(HVec::basis(sp, sig.a(i))), DualVec::basis(sp, sig.b(i)));
        EXPECT_EQ(jmath(HVec::basis(sp, sig.b(i))), DualVec::basis(sp, sig.a(i), -1));
    }
}
