#ifndef KFRAME_EXPANSION_HPP
#define KFRAME_EXPANSION_HPP

#include <cstdint>
#include <vector>

#include <kframe/pairing.hpp>
#include <kframe/rng.hpp>
#include <kframe/tensor.hpp>
#include <kframe/word.hpp>

namespace kframe
{

/// A K-expansion of the free group pi, presented by its values on the free
/// generators: theta(x) = 1 + [x] + theta_2(x) + ... + theta_N(x).
///
/// Only the degree >= 2 parts are free data; the constant and linear terms are
/// enforced on construction.
class Expansion
{
public:
    Expansion() = default;

    /// `higher[x]` holds the degree 2..N part of theta(x) for every generator x.
    static Expansion from_higher_terms(const Space &space, int truncation, const std::vector<Tensor> &higher)
    {
        if (truncation < 2) {
            throw TruncationMismatch("expansions need truncation degree >= 2");
        }
        if (static_cast<int>(higher.size()) != space.dim()) {
            throw InvalidExpansion("expected one tensor per generator");
        }
        Expansion e;
        e.space_ = space;
        e.truncation_ = truncation;
        for (int x = 0; x < space.dim(); ++x) {
            const Tensor &h = higher[static_cast<std::size_t>(x)];
            check_same_space(space, h.space());
            if (h.truncation() != truncation) {
                throw TruncationMismatch("generator value has truncation " + std::to_string(h.truncation()));
            }
            for (const auto &[idx, c] : h.terms()) {
                if (idx.size() < 2) {
                    throw InvalidExpansion("generator " + space.sig.generator_name(x)
                                           + ": degree 0 and 1 parts are fixed by the expansion axioms");
                }
            }
            Tensor full = Tensor::one(space, truncation) + Tensor::monomial(space, truncation, {x}) + h;
            e.inverses_.push_back(full.inverse());
            e.values_.push_back(std::move(full));
        }
        return e;
    }

    const Space &space() const noexcept { return space_; }
    const SurfaceSig &sig() const noexcept { return space_.sig; }
    int truncation() const noexcept { return truncation_; }

    const Tensor &value(int gen) const { return values_.at(static_cast<std::size_t>(gen)); }
    const Tensor &inverse_value(int gen) const { return inverses_.at(static_cast<std::size_t>(gen)); }

    Tensor theta2(int gen) const { return value(gen).degree_part(2).truncated(2); }

    /// The degree >= 2 part of every generator value.
    std::vector<Tensor> higher_terms() const
    {
        std::vector<Tensor> out;
        for (int x = 0; x < space_.dim(); ++x) {
            Tensor h(space_, truncation_);
            for (const auto &[idx, c] : value(x).terms()) {
                if (idx.size() >= 2) {
                    h.add_term(idx, c);
                }
            }
            out.push_back(std::move(h));
        }
        return out;
    }

    friend bool operator==(const Expansion &a, const Expansion &b)
    {
        return a.space_ == b.space_ && a.truncation_ == b.truncation_ && a.values_ == b.values_;
    }

private:
    Space space_;
    int truncation_ = 0;
    std::vector<Tensor> values_;
    std::vector<Tensor> inverses_;
};

/// theta(w) computed modulo degrees above `degree` (defaults to the expansion's truncation).
inline Tensor eval(const Expansion &theta, std::span<const Letter> letters, int degree = -1)
{
    if (degree < 0 || degree > theta.truncation()) {
        degree = theta.truncation();
    }
    Tensor acc = Tensor::one(theta.space(), degree);
    bool full = degree == theta.truncation();
    for (const Letter &l : letters) {
        theta.sig().check_index(l.gen);
        const Tensor &f = l.inverse ? theta.inverse_value(l.gen) : theta.value(l.gen);
        acc = acc * (full ? f : f.truncated(degree));
    }
    return acc;
}

inline Tensor eval(const Expansion &theta, const Word &w, int degree = -1)
{
    if (!(w.sig() == theta.sig())) {
        throw SignatureMismatch("word " + w.sig().to_string() + " vs expansion " + theta.sig().to_string());
    }
    return eval(theta, w.letters(), degree);
}

/// theta_2(w) as a truncation-2 tensor.
inline Tensor theta2_of(const Expansion &theta, const Word &w) { return eval(theta, w, 2).degree_part(2); }

/// The weakly 3-symplectic expansion theta_2(a_i) = A_i B_i, theta_2(b_i) = B_i A_i, theta_m = 0 for m >= 3.
inline Expansion make_default_w3s(const SurfaceSig &sig, const RingSpec &ring, int truncation = 3)
{
    require_closed_boundary_case(sig, "make_default_w3s");
    Space sp{sig, ring};
    std::vector<Tensor> higher;
    for (int x = 0; x < sig.rank(); ++x) {
        int partner = sig.is_a(x) ? x + sig.g : x - sig.g;
        higher.push_back(Tensor::monomial(sp, truncation, {x, partner}));
    }
    return Expansion::from_higher_terms(sp, truncation, higher);
}

namespace detail
{

inline void fill_random(Tensor &t, Rng &rng, int degree)
{
    int dim = t.space().dim();
    MultiIndex idx(static_cast<std::size_t>(degree), 0);
    while (true) {
        t.add_term(idx, t.space().integer(rng.uniform(-2, 2)));
        int p = degree - 1;
        while (p >= 0 && ++idx[static_cast<std::size_t>(p)] == dim) {
            idx[static_cast<std::size_t>(p)] = 0;
            --p;
        }
        if (p < 0) {
            return;
        }
    }
}

} // namespace detail

/// theta_2 and theta_3 on generators with every coefficient drawn from {-2..2}.
inline Expansion make_random_expansion(const SurfaceSig &sig, const RingSpec &ring, std::uint64_t seed,
                                       int truncation = 3)
{
    require_closed_boundary_case(sig, "make_random_expansion");
    Space sp{sig, ring};
    Rng rng(seed);
    std::vector<Tensor> higher;
    for (int x = 0; x < sig.rank(); ++x) {
        Tensor h(sp, truncation);
        detail::fill_random(h, rng, 2);
        if (truncation >= 3) {
            detail::fill_random(h, rng, 3);
        }
        higher.push_back(std::move(h));
    }
    return Expansion::from_higher_terms(sp, truncation, higher);
}

/// sum_i [A_i, theta_2(b_i) - B_i A_i] - [B_i, theta_2(a_i) - A_i B_i], computed
/// from generator data only.
inline Tensor theta3_zeta_closed_form(const Expansion &theta)
{
    const SurfaceSig &sig = theta.sig();
    require_closed_boundary_case(sig, "theta3_zeta_closed_form");
    const Space &sp = theta.space();
    const int n = 3;
    Tensor out(sp, n);
    for (int i = 1; i <= sig.g; ++i) {
        int a = sig.a(i);
        int b = sig.b(i);
        Tensor A = Tensor::monomial(sp, n, {a});
        Tensor B = Tensor::monomial(sp, n, {b});
        Tensor t2a = theta.theta2(a).truncated(n);
        Tensor t2b = theta.theta2(b).truncated(n);
        out += bracket(A, t2b - Tensor::monomial(sp, n, {b, a}));
        out -= bracket(B, t2a - Tensor::monomial(sp, n, {a, b}));
    }
    return out;
}

/// True iff the degree-3 part of theta(zeta) vanishes, decided by direct evaluation.
inline bool is_weakly_3_symplectic(const Expansion &theta)
{
    require_closed_boundary_case(theta.sig(), "is_weakly_3_symplectic");
    if (theta.truncation() < 3) {
        throw TruncationMismatch("weak 3-symplecticity needs truncation >= 3");
    }
    return eval(theta, boundary_word(theta.sig()), 3).degree_part(3).is_zero();
}

/// A random weakly 3-symplectic expansion: the default one plus random
/// perturbations of theta_2 lying in the kernel of the closed form, with
/// random theta_3 (which never enters theta_3(zeta)).
///
/// The kernel directions used are the cyclic sums
/// [e1, e2 e3] + [e2, e3 e1] + [e3, e1 e2] = 0 and [A_i, A_i A_i] = [B_i, B_i B_i] = 0.
inline Expansion make_random_w3s(const SurfaceSig &sig, const RingSpec &ring, std::uint64_t seed,
                                 int truncation = 3)
{
    require_closed_boundary_case(sig, "make_random_w3s");
    Space sp{sig, ring};
    Rng rng(seed);
    std::vector<Tensor> higher = make_default_w3s(sig, ring, truncation).higher_terms();
    int dim = sig.rank();
    if (dim == 0) {
        return Expansion::from_higher_terms(sp, truncation, higher);
    }
    // A term [e, t] of the closed form comes from theta_2(b_i) when e = A_i and
    // from -theta_2(a_i) when e = B_i.
    auto add_bracket_source = [&](int e, const MultiIndex &t, long long c) {
        if (sig.is_a(e)) {
            higher[static_cast<std::size_t>(e + sig.g)].add_term(t, sp.integer(c));
        } else {
            higher[static_cast<std::size_t>(e - sig.g)].add_term(t, sp.integer(-c));
        }
    };
    for (int e = 0; e < dim; ++e) {
        add_bracket_source(e, {e, e}, rng.uniform(-2, 2));
    }
    int triples = static_cast<int>(rng.uniform(1, 3 * dim));
    for (int k = 0; k < triples; ++k) {
        int e1 = static_cast<int>(rng.uniform(0, dim - 1));
        int e2 = static_cast<int>(rng.uniform(0, dim - 1));
        int e3 = static_cast<int>(rng.uniform(0, dim - 1));
        long long c = rng.uniform(-2, 2);
        add_bracket_source(e1, {e2, e3}, c);
        add_bracket_source(e2, {e3, e1}, c);
        add_bracket_source(e3, {e1, e2}, c);
    }
    if (truncation >= 3) {
        for (auto &h : higher) {
            detail::fill_random(h, rng, 3);
        }
    }
    return Expansion::from_higher_terms(sp, truncation, higher);
}

} // namespace kframe

#endif
