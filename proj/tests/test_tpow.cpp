#include <gtest/gtest.h>

#include <kframe/expansion.hpp>
#include <kframe/qform.hpp>
#include <kframe/random.hpp>

#include "oracles.hpp"

using namespace kframe;

namespace
{

Tensor mono(const Space &sp, MultiIndex idx, long long c = 1, int N = 3) { return Tensor::monomial(sp, N, idx, c); }

} // namespace

TEST(TensorMul, Examples)
{
    SurfaceSig sig{1, 0};
    Space sp{sig, RingSpec::integers()};
    int A = sig.a(1), B = sig.b(1);
    Tensor one = Tensor::one(sp, 3);
    Tensor lhs = (one + mono(sp, {A})) * (one + mono(sp, {B}));
    EXPECT_EQ(lhs, one + mono(sp, {A}) + mono(sp, {B}) + mono(sp, {A, B}));
    EXPECT_TRUE((mono(sp, {A, B}) * mono(sp, {A, B})).is_zero());
    Tensor t = one + mono(sp, {A, B}, 3) - mono(sp, {B, B, A});
    EXPECT_EQ(one * t, t);
    EXPECT_THROW(t * Tensor::one(sp, 2), TruncationMismatch);
    EXPECT_THROW(t * Tensor::one(Space{sig, RingSpec::rationals()}, 3), RingMismatch);
}

TEST(TensorInverse, Examples)
{
    SurfaceSig sig{1, 0};
    Space sp{sig, RingSpec::integers()};
    int A = sig.a(1), B = sig.b(1);
    Tensor one = Tensor::one(sp, 3);
    EXPECT_EQ((one + mono(sp, {A})).inverse(), one - mono(sp, {A}) + mono(sp, {A, A}) - mono(sp, {A, A, A}));
    EXPECT_EQ(one.inverse(), one);
    Tensor th2 = mono(sp, {A, B}, 2) - mono(sp, {B, B});
    Tensor inv = (one + mono(sp, {A}) + th2).inverse();
    EXPECT_EQ(inv.degree_part(2), mono(sp, {A, A}) - th2);
    EXPECT_EQ((one + mono(sp, {A}) + th2) * inv, one);
    EXPECT_THROW(mono(sp, {A}).inverse(), NotUnitNormalized);
    EXPECT_THROW((one + one).inverse(), NotUnitNormalized);
}

TEST(Eval, Examples)
{
    SurfaceSig sig{2, 0};
    Space sp{sig, RingSpec::integers()};
    Expansion theta = make_default_w3s(sig, sp.ring);
    Tensor a1 = eval(theta, parse_word(sig, "a1"), 2);
    EXPECT_EQ(a1, Tensor::one(sp, 2) + mono(sp, {sig.a(1)}, 1, 2) + mono(sp, {sig.a(1), sig.b(1)}, 1, 2));
    EXPECT_EQ(eval(theta, parse_letters(sig, "a1 a1'")), Tensor::one(sp, 3));
    Tensor expect(sp, 3);
    for (int i = 1; i <= 2; ++i) {
        expect += mono(sp, {sig.a(i), sig.b(i)}) - mono(sp, {sig.b(i), sig.a(i)});
    }
    Expansion random = make_random_expansion(sig, sp.ring, 17);
    EXPECT_EQ(eval(random, boundary_word(sig)).degree_part(2), expect);
    EXPECT_THROW(eval(theta, parse_word(SurfaceSig{1, 0}, "a1")), SignatureMismatch);
}

TEST(Eval, MatchesDenseOracle)
{
    Rng rng(8);
    for (const auto &r : {RingSpec::integers(), RingSpec::rationals(), RingSpec::mod(6)}) {
        for (int g = 1; g <= 3; ++g) {
            SurfaceSig sig{g, 0};
            Space sp{sig, r};
            Expansion theta = make_random_expansion(sig, r, rng.next());
            oracle::DenseExpansion de = oracle::lift(theta);
            for (int k = 0; k < 20; ++k) {
                Word w = random_word(sig, rng, 10);
                Tensor got = eval(theta, w);
                oracle::Dense want = oracle::eval(de, sp.dim(), 3, w);
                Tensor want_t(sp, 3);
                for (int m = 0; m <= 3; ++m) {
                    want_t += oracle::to_tensor(want, sp, m, 3);
                }
                EXPECT_EQ(got, want_t);
                EXPECT_EQ(got.degree_part(1), Tensor::from_vector(homology_class(w, r), 3));
            }
        }
    }
}

TEST(DefaultExpansion, Examples)
{
    SurfaceSig sig{2, 0};
    Space sp{sig, RingSpec::integers()};
    Expansion theta = make_default_w3s(sig, sp.ring);
    EXPECT_TRUE(is_weakly_3_symplectic(theta));
    EXPECT_EQ(theta.theta2(sig.a(1)), mono(sp, {sig.a(1), sig.b(1)}, 1, 2));
    EXPECT_EQ(theta.theta2(sig.b(2)), mono(sp, {sig.b(2), sig.a(2)}, 1, 2));
    EXPECT_EQ(from_expansion(theta).generator_value(sig.a(1)), sp.one());
    EXPECT_THROW(make_default_w3s(SurfaceSig{1, 1}, sp.ring), UnsupportedSignature);
}

TEST(RandomExpansion, Examples)
{
    SurfaceSig sig{2, 0};
    RingSpec r = RingSpec::mod(5);
    EXPECT_EQ(make_random_expansion(sig, r, 42), make_random_expansion(sig, r, 42));
    EXPECT_FALSE(make_random_expansion(sig, r, 42) == make_random_expansion(sig, r, 43));
    Expansion theta = make_random_expansion(sig, r, 42);
    for (int x = 0; x < sig.rank(); ++x) {
        EXPECT_EQ(theta.value(x).degree_part(1), Tensor::monomial(theta.space(), 3, {x}));
        EXPECT_EQ(theta.value(x).coefficient({}), Scalar::one(r));
    }
    EXPECT_THROW(make_random_expansion(SurfaceSig{1, 2}, r, 1), UnsupportedSignature);
}

TEST(ExpansionConstruction, RejectsLowDegreeData)
{
    SurfaceSig sig{1, 0};
    Space sp{sig, RingSpec::integers()};
    std::vector<Tensor> h(2, Tensor(sp, 3));
    h[0] = mono(sp, {sig.b(1)});
    EXPECT_THROW(Expansion::from_higher_terms(sp, 3, h), InvalidExpansion);
}

TEST(Theta3Zeta, Examples)
{
    SurfaceSig sig{1, 0};
    Space sp{sig, RingSpec::integers()};
    int A = sig.a(1), B = sig.b(1);
    EXPECT_TRUE(theta3_zeta_closed_form(make_default_w3s(sig, sp.ring)).is_zero());

    Expansion zero2 = Expansion::from_higher_terms(sp, 3, std::vector<Tensor>(2, Tensor(sp, 3)));
    // [A, -BA] - [B, -AB] written out term by term.
    Tensor want = -mono(sp, {A, B, A}) + mono(sp, {B, A, A}) + mono(sp, {B, A, B}) - mono(sp, {A, B, B});
    EXPECT_EQ(theta3_zeta_closed_form(zero2), want);
    EXPECT_EQ(eval(zero2, boundary_word(sig)).degree_part(3), want);
    EXPECT_FALSE(is_weakly_3_symplectic(zero2));
}

TEST(Theta3Zeta, ClosedFormMatchesDenseEvaluation)
{
    Rng rng(21);
    for (const auto &r : {RingSpec::integers(), RingSpec::mod(2), RingSpec::mod(5)}) {
        for (int g = 1; g <= 3; ++g) {
            SurfaceSig sig{g, 0};
            Space sp{sig, r};
            for (int k = 0; k < 10; ++k) {
                Expansion theta = make_random_expansion(sig, r, rng.next());
                oracle::Dense z = oracle::eval(oracle::lift(theta), sp.dim(), 3, boundary_word(sig));
                EXPECT_EQ(theta3_zeta_closed_form(theta), oracle::to_tensor(z, sp, 3, 3));
            }
        }
    }
}

TEST(Theta3Zeta, Mod2SymmetricTweaksDecidedByEvaluation)
{
    SurfaceSig sig{2, 0};
    Space sp{sig, RingSpec::mod(2)};
    std::vector<Tensor> h;
    for (int x = 0; x < sig.rank(); ++x) {
        int p = sig.is_a(x) ? x + sig.g : x - sig.g;
        h.push_back(mono(sp, {x, p}) + mono(sp, {p, x}));
    }
    Expansion theta = Expansion::from_higher_terms(sp, 3, h);
    oracle::Dense z = oracle::eval(oracle::lift(theta), sp.dim(), 3, boundary_word(sig));
    EXPECT_EQ(is_weakly_3_symplectic(theta), oracle::to_tensor(z, sp, 3, 3).is_zero());
}

TEST(RandomW3s, IsWeakly3Symplectic)
{
    for (const auto &r : {RingSpec::integers(), RingSpec::rationals(), RingSpec::mod(2), RingSpec::mod(6)}) {
        for (int g = 1; g <= 3; ++g) {
            for (std::uint64_t s = 0; s < 20; ++s) {
                Expansion theta = make_random_w3s(SurfaceSig{g, 0}, r, s);
                EXPECT_TRUE(is_weakly_3_symplectic(theta));
            }
        }
    }
    // Perturbations are not all trivial.
    EXPECT_FALSE(make_random_w3s(SurfaceSig{2, 0}, RingSpec::integers(), 1)
                 == make_default_w3s(SurfaceSig{2, 0}, RingSpec::integers()));
}

TEST(ExpansionProperties, EvalIsMultiplicative)
{
    Rng rng(31);
    SurfaceSig sig{2, 0};
    for (const auto &r : {RingSpec::integers(), RingSpec::mod(5)}) {
        Expansion theta = make_random_expansion(sig, r, rng.next());
        for (int k = 0; k < 100; ++k) {
            Word u = random_word(sig, rng, 8), v = random_word(sig, rng, 8);
            EXPECT_EQ(eval(theta, u * v), eval(theta, u) * eval(theta, v));
            Tensor c2 = eval(theta, commutator(u, v)).degree_part(2);
            Tensor U = Tensor::from_vector(homology_class(u, r), 3), V = Tensor::from_vector(homology_class(v, r), 3);
            EXPECT_EQ(c2, bracket(U, V).degree_part(2));
        }
    }
}
