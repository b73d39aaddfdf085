// Independent reference computations used by the tests. Nothing here calls the
// library's tensor product, fold or contraction code.

#ifndef KFRAME_TESTS_ORACLES_HPP
#define KFRAME_TESTS_ORACLES_HPP

#include <cstdint>
#include <vector>

#include <kframe/kframe.hpp>

namespace oracle
{

using kframe::BigInt;

// Dense truncated tensor algebra over Z. Component m is a flat array of size d^m,
// index (i1..im) -> ((i1 * d) + i2) * d + ...
struct Dense {
    int d = 0;
    int N = 0;
    std::vector<std::vector<BigInt>> part;

    Dense(int d_, int N_) : d(d_), N(N_), part(static_cast<std::size_t>(N_ + 1))
    {
        std::size_t sz = 1;
        for (int m = 0; m <= N; ++m) {
            part[static_cast<std::size_t>(m)].assign(sz, 0);
            sz *= static_cast<std::size_t>(d);
        }
    }

    static Dense one(int d, int N)
    {
        Dense t(d, N);
        t.part[0][0] = 1;
        return t;
    }

    Dense operator*(const Dense &o) const
    {
        Dense r(d, N);
        for (int p = 0; p <= N; ++p) {
            for (int q = 0; p + q <= N; ++q) {
                const auto &x = part[static_cast<std::size_t>(p)];
                const auto &y = o.part[static_cast<std::size_t>(q)];
                auto &z = r.part[static_cast<std::size_t>(p + q)];
                std::size_t ny = y.size();
                for (std::size_t i = 0; i < x.size(); ++i) {
                    if (x[i] == 0) {
                        continue;
                    }
                    for (std::size_t j = 0; j < ny; ++j) {
                        if (y[j] != 0) {
                            z[i * ny + j] += x[i] * y[j];
                        }
                    }
                }
            }
        }
        return r;
    }

    Dense operator-() const
    {
        Dense r = *this;
        for (auto &p : r.part) {
            for (auto &c : p) {
                c = -c;
            }
        }
        return r;
    }

    Dense operator+(const Dense &o) const
    {
        Dense r = *this;
        for (std::size_t m = 0; m < part.size(); ++m) {
            for (std::size_t i = 0; i < part[m].size(); ++i) {
                r.part[m][i] += o.part[m][i];
            }
        }
        return r;
    }

    // 1 - x + x^2 - ... for a tensor with constant term 1.
    Dense inverse() const
    {
        Dense x = *this;
        x.part[0][0] = 0;
        Dense acc = one(d, N), pw = one(d, N);
        for (int k = 1; k <= N; ++k) {
            pw = pw * (-x);
            acc = acc + pw;
        }
        return acc;
    }

    BigInt at(const kframe::MultiIndex &idx) const
    {
        std::size_t flat = 0;
        for (int e : idx) {
            flat = flat * static_cast<std::size_t>(d) + static_cast<std::size_t>(e);
        }
        return part[idx.size()][flat];
    }
};

// Integer lift of theta on every generator and its inverse.
struct DenseExpansion {
    std::vector<Dense> value, inverse;
};

inline DenseExpansion lift(const kframe::Expansion &theta)
{
    int d = theta.space().dim();
    int N = theta.truncation();
    DenseExpansion e;
    for (int x = 0; x < d; ++x) {
        Dense t(d, N);
        for (const auto &[idx, c] : theta.value(x).terms()) {
            std::size_t flat = 0;
            for (int i : idx) {
                flat = flat * static_cast<std::size_t>(d) + static_cast<std::size_t>(i);
            }
            t.part[idx.size()][flat] = c.num();
        }
        e.inverse.push_back(t.inverse());
        e.value.push_back(std::move(t));
    }
    return e;
}

inline Dense eval(const DenseExpansion &e, int d, int N, const kframe::Word &w)
{
    Dense acc = Dense::one(d, N);
    for (const auto &l : w.letters()) {
        acc = acc * (l.inverse ? e.inverse[static_cast<std::size_t>(l.gen)] : e.value[static_cast<std::size_t>(l.gen)]);
    }
    return acc;
}

// Degree-m part of a dense tensor as a library Tensor over `space` (truncation N).
inline kframe::Tensor to_tensor(const Dense &t, const kframe::Space &space, int m, int N)
{
    kframe::Tensor out(space, N);
    kframe::MultiIndex idx(static_cast<std::size_t>(m), 0);
    const auto &p = t.part[static_cast<std::size_t>(m)];
    for (std::size_t flat = 0; flat < p.size(); ++flat) {
        if (p[flat] == 0) {
            continue;
        }
        std::size_t r = flat;
        for (int k = m - 1; k >= 0; --k) {
            idx[static_cast<std::size_t>(k)] = static_cast<int>(r % static_cast<std::size_t>(t.d));
            r /= static_cast<std::size_t>(t.d);
        }
        out.add_term(idx, kframe::Scalar::from_integer(space.ring, p[flat]));
    }
    return out;
}

// Intersection of basis vectors straight from the symplectic basis description.
inline long long gram(const kframe::SurfaceSig &sig, int x, int y)
{
    if (x < sig.g && y == x + sig.g) {
        return 1;
    }
    if (y < sig.g && x == y + sig.g) {
        return -1;
    }
    return 0;
}

// q(x_1 ... x_k) = sum_i q(x_i) + sum_{i<j} flat(x_i, x_j), for signed letters.
inline kframe::Scalar q_pairwise(const kframe::QuadraticForm &q, const std::vector<kframe::Letter> &w)
{
    const auto &sig = q.sig();
    long long cross = 0;
    kframe::Scalar v = q.space().zero();
    for (std::size_t i = 0; i < w.size(); ++i) {
        v += w[i].inverse ? -q.generator_value(w[i].gen) : q.generator_value(w[i].gen);
        for (std::size_t j = i + 1; j < w.size(); ++j) {
            cross += w[i].sign() * w[j].sign() * gram(sig, w[i].gen, w[j].gen);
        }
    }
    return v + q.space().integer(cross);
}

// T (x) T for the twist along a_1, with T - 1 = B_1* (x) A_1, on a degree-2 tensor.
inline kframe::Tensor twist_a1_square(const kframe::Tensor &t2)
{
    const auto &sp = t2.space();
    int a1 = sp.sig.a(1), b1 = sp.sig.b(1);
    kframe::Tensor out(sp, t2.truncation());
    for (const auto &[idx, c] : t2.terms()) {
        std::vector<int> xs = {idx[0]}, ys = {idx[1]};
        if (idx[0] == b1) {
            xs.push_back(a1);
        }
        if (idx[1] == b1) {
            ys.push_back(a1);
        }
        for (int x : xs) {
            for (int y : ys) {
                out.add_term({x, y}, c);
            }
        }
    }
    return out;
}

// The four-term expression for tau(twist_a(1)) in terms of theta_2 on
// generators and on b_1 a_1^-1, with the B_1* (x) theta_2(a_1) term included.
inline kframe::HomTensor tau_twist_a1_closed_form(const kframe::Expansion &theta)
{
    const auto &sp = theta.space();
    const auto &sig = sp.sig;
    DenseExpansion de = lift(theta);
    auto th2 = [&](const kframe::Word &w) { return to_tensor(eval(de, sp.dim(), 2, w), sp, 2, 2); };
    auto one_minus_T2 = [&](const kframe::Tensor &t) { return t - twist_a1_square(t); };
    std::vector<kframe::Tensor> slots(static_cast<std::size_t>(sp.dim()), kframe::Tensor(sp, 2));
    for (int x = 0; x < sp.dim(); ++x) {
        if (x == sig.b(1)) {
            continue;
        }
        slots[static_cast<std::size_t>(x)] = one_minus_T2(th2(kframe::Word::generator(sig, x)));
    }
    kframe::Word ba = kframe::parse_word(sig, "b1 a1'");
    kframe::Tensor b1a1 = kframe::Tensor::monomial(sp, 2, {sig.b(1), sig.a(1)});
    kframe::Tensor a1a1 = kframe::Tensor::monomial(sp, 2, {sig.a(1), sig.a(1)});
    slots[static_cast<std::size_t>(sig.b(1))] =
        one_minus_T2(th2(ba)) + th2(kframe::Word::generator(sig, sig.a(1))) + b1a1 - a1a1;
    return kframe::HomTensor::from_slots(sp, slots);
}

// (flat theta_2(a_1) - 1) B_1*
inline kframe::DualVec flat_side_twist_a1(const kframe::Expansion &theta)
{
    const auto &sp = theta.space();
    kframe::Scalar f = sp.zero();
    kframe::Tensor t2 = theta.theta2(sp.sig.a(1));
    for (const auto &[idx, c] : t2.terms()) {
        f += kframe::Scalar::from_integer(sp.ring, gram(sp.sig, idx[0], idx[1])) * c;
    }
    return (f - sp.one()) * kframe::DualVec::basis(sp, sp.sig.b(1));
}

// (1 - sum_i [(A_i* (x) B_1*) theta_2(a_i) + (B_i* (x) B_1*) theta_2(b_i)]) A_1
inline kframe::HVec contraction_twist_a1(const kframe::Expansion &theta)
{
    const auto &sp = theta.space();
    const auto &sig = sp.sig;
    kframe::Scalar s = sp.one();
    for (int i = 1; i <= sig.g; ++i) {
        s -= theta.theta2(sig.a(i)).coefficient({sig.a(i), sig.b(1)});
        s -= theta.theta2(sig.b(i)).coefficient({sig.b(i), sig.b(1)});
    }
    return s * kframe::HVec::basis(sp, sig.a(1));
}

// Brute-force search for inverses mod m.
inline long long inverse_mod(long long a, long long m)
{
    for (long long x = 1; x < m; ++x) {
        if ((a % m) * x % m == 1) {
            return x;
        }
    }
    return -1;
}

} // namespace oracle

#endif
