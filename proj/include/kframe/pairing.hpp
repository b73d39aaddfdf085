#ifndef KFRAME_PAIRING_HPP
#define KFRAME_PAIRING_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include <kframe/homology.hpp>
#include <kframe/tensor.hpp>

namespace kframe
{

/// Intersection number of two basis vectors: 1 on (A_i, B_i), -1 on
/// (B_i, A_i), 0 otherwise. Boundary classes D_j lie in the radical.
inline int flat_basis(const SurfaceSig &sig, int x, int y)
{
    if (sig.is_a(x) && y == x + sig.g) {
        return 1;
    }
    if (sig.is_b(x) && y == x - sig.g) {
        return -1;
    }
    return 0;
}

/// The algebraic intersection form on H.
inline Scalar flat(const HVec &x, const HVec &y)
{
    check_same_space(x.space(), y.space());
    const SurfaceSig &sig = x.space().sig;
    Scalar s = x.space().zero();
    for (int i = 0; i < 2 * sig.g; ++i) {
        int j = sig.is_a(i) ? i + sig.g : i - sig.g;
        if (x[i].is_zero() || y[j].is_zero()) {
            continue;
        }
        Scalar term = x[i] * y[j];
        s += flat_basis(sig, i, j) > 0 ? term : -term;
    }
    return s;
}

/// The intersection form applied to the degree-2 part of a tensor.
inline Scalar flat(const Tensor &t)
{
    const SurfaceSig &sig = t.space().sig;
    Scalar s = t.space().zero();
    for (const auto &[idx, c] : t.terms()) {
        if (idx.size() != 2) {
            continue;
        }
        int f = flat_basis(sig, idx[0], idx[1]);
        if (f > 0) {
            s += c;
        } else if (f < 0) {
            s -= c;
        }
    }
    return s;
}

/// Poincare duality X -> (Y -> flat(X, Y)).
inline DualVec jmath(const HVec &x)
{
    const Space &sp = x.space();
    DualVec f(sp);
    for (int i = 0; i < 2 * sp.sig.g; ++i) {
        if (x[i].is_zero()) {
            continue;
        }
        int j = sp.sig.is_a(i) ? i + sp.sig.g : i - sp.sig.g;
        f[j] += flat_basis(sp.sig, i, j) > 0 ? x[i] : -x[i];
    }
    return f;
}

/// An element of H* (x) H (x) H, keyed by (dual slot, first factor, second factor).
class HomTensor
{
public:
    using Key = std::array<int, 3>;
    using Terms = std::map<Key, Scalar>;

    HomTensor() = default;
    explicit HomTensor(const Space &space) : space_(space) {}

    /// Builds sum_x x* (x) slot[x] from one degree-2 tensor per dual basis vector.
    static HomTensor from_slots(const Space &space, const std::vector<Tensor> &slots)
    {
        if (static_cast<int>(slots.size()) != space.dim()) {
            throw SignatureMismatch("expected one slot per basis vector");
        }
        HomTensor h(space);
        for (int f = 0; f < space.dim(); ++f) {
            check_same_space(space, slots[static_cast<std::size_t>(f)].space());
            for (const auto &[idx, c] : slots[static_cast<std::size_t>(f)].terms()) {
                if (idx.size() == 2) {
                    h.add_term({f, idx[0], idx[1]}, c);
                }
            }
        }
        return h;
    }

    const Space &space() const noexcept { return space_; }
    const Terms &terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add_term(const Key &k, const Scalar &c)
    {
        for (int i : k) {
            space_.sig.check_index(i);
        }
        if (c.is_zero()) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                terms_.erase(it);
            }
        }
    }

    /// The H (x) H component paired with dual basis vector f, as a truncation-2 tensor.
    Tensor slot(int f) const
    {
        Tensor t(space_, 2);
        for (const auto &[k, c] : terms_) {
            if (k[0] == f) {
                t.add_term({k[1], k[2]}, c);
            }
        }
        return t;
    }

    HomTensor &operator+=(const HomTensor &o)
    {
        check_same_space(space_, o.space_);
        for (const auto &[k, c] : o.terms_) {
            add_term(k, c);
        }
        return *this;
    }
    HomTensor &operator-=(const HomTensor &o)
    {
        check_same_space(space_, o.space_);
        for (const auto &[k, c] : o.terms_) {
            add_term(k, -c);
        }
        return *this;
    }
    friend HomTensor operator+(HomTensor a, const HomTensor &b) { return a += b; }
    friend HomTensor operator-(HomTensor a, const HomTensor &b) { return a -= b; }

    friend bool operator==(const HomTensor &a, const HomTensor &b)
    {
        return a.space_ == b.space_ && a.terms_ == b.terms_;
    }

    /// e.g. "A1* (x) (-A1 A1) + B1* (x) (A1 B1 + B1 A1)"
    std::string to_string() const
    {
        std::string out;
        for (int f = 0; f < space_.dim(); ++f) {
            Tensor s = slot(f);
            if (s.is_zero()) {
                continue;
            }
            out += (out.empty() ? "" : " + ") + space_.sig.basis_name(f) + "* (x) (" + s.to_string() + ")";
        }
        return out.empty() ? "0" : out;
    }

private:
    Space space_;
    Terms terms_;
};

/// f (x) X1 X2 -> f(X1) X2
inline HVec contract(const HomTensor &t)
{
    HVec v(t.space());
    for (const auto &[k, c] : t.terms()) {
        if (k[0] == k[1]) {
            v[k[2]] += c;
        }
    }
    return v;
}

/// f (x) X1 X2 -> f(X2) X1
inline HVec contract_switched(const HomTensor &t)
{
    HVec v(t.space());
    for (const auto &[k, c] : t.terms()) {
        if (k[0] == k[2]) {
            v[k[1]] += c;
        }
    }
    return v;
}

/// f (x) X1 X2 -> flat(X1, X2) f
inline DualVec one_tensor_flat(const HomTensor &t)
{
    DualVec f(t.space());
    for (const auto &[k, c] : t.terms()) {
        int s = flat_basis(t.space().sig, k[1], k[2]);
        if (s > 0) {
            f[k[0]] += c;
        } else if (s < 0) {
            f[k[0]] -= c;
        }
    }
    return f;
}

} // namespace kframe

#endif
