#ifndef KFRAME_TENSOR_HPP
#define KFRAME_TENSOR_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <kframe/homology.hpp>
#include <kframe/surface.hpp>

namespace kframe
{

/// A word in the homology basis; the empty index is the unit of T(H).
using MultiIndex = std::vector<int>;

/// Orders multi-indices by degree first, then lexicographically.
struct DegLex {
    bool operator()(const MultiIndex &a, const MultiIndex &b) const
    {
        if (a.size() != b.size()) {
            return a.size() < b.size();
        }
        return a < b;
    }
};

/// An element of the truncated tensor algebra T(H)/T(H)_{>N}.
///
/// Sparse: only nonzero coefficients are stored, every key has length <= N.
class Tensor
{
public:
    using Terms = std::map<MultiIndex, Scalar, DegLex>;

    Tensor() = default;
    Tensor(const Space &space, int truncation) : space_(space), truncation_(truncation)
    {
        if (truncation < 0) {
            throw TruncationMismatch("truncation degree must be non-negative");
        }
    }

    static Tensor one(const Space &space, int truncation) { return scalar(space.one(), space, truncation); }

    static Tensor scalar(const Scalar &c, const Space &space, int truncation)
    {
        Tensor t(space, truncation);
        t.add_term({}, c);
        return t;
    }

    /// The degree-1 tensor with the coordinates of x.
    static Tensor from_vector(const HVec &x, int truncation)
    {
        Tensor t(x.space(), truncation);
        for (int i = 0; i < x.dim(); ++i) {
            t.add_term({i}, x[i]);
        }
        return t;
    }

    static Tensor monomial(const Space &space, int truncation, MultiIndex idx, long long coef = 1)
    {
        Tensor t(space, truncation);
        t.add_term(std::move(idx), space.integer(coef));
        return t;
    }

    const Space &space() const noexcept { return space_; }
    int truncation() const noexcept { return truncation_; }
    const Terms &terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    Scalar coefficient(const MultiIndex &idx) const
    {
        auto it = terms_.find(idx);
        return it == terms_.end() ? space_.zero() : it->second;
    }

    /// Adds c * idx; terms beyond the truncation degree are dropped.
    void add_term(MultiIndex idx, const Scalar &c)
    {
        if (static_cast<int>(idx.size()) > truncation_ || c.is_zero()) {
            return;
        }
        for (int i : idx) {
            space_.sig.check_index(i);
        }
        auto [it, inserted] = terms_.try_emplace(std::move(idx), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                terms_.erase(it);
            }
        }
    }

    /// The homogeneous component of degree m (same truncation).
    Tensor degree_part(int m) const
    {
        Tensor t(space_, truncation_);
        for (const auto &[idx, c] : terms_) {
            if (static_cast<int>(idx.size()) == m) {
                t.terms_.emplace(idx, c);
            }
        }
        return t;
    }

    /// The same element viewed in T(H)/T(H)_{>n}.
    Tensor truncated(int n) const
    {
        Tensor t(space_, n);
        for (const auto &[idx, c] : terms_) {
            if (static_cast<int>(idx.size()) <= n) {
                t.terms_.emplace(idx, c);
            }
        }
        return t;
    }

    Tensor &operator+=(const Tensor &o)
    {
        check_compatible(o);
        for (const auto &[idx, c] : o.terms_) {
            add_term(idx, c);
        }
        return *this;
    }
    Tensor &operator-=(const Tensor &o)
    {
        check_compatible(o);
        for (const auto &[idx, c] : o.terms_) {
            add_term(idx, -c);
        }
        return *this;
    }
    friend Tensor operator+(Tensor a, const Tensor &b) { return a += b; }
    friend Tensor operator-(Tensor a, const Tensor &b) { return a -= b; }
    Tensor operator-() const
    {
        Tensor t = *this;
        for (auto &[idx, c] : t.terms_) {
            c = -c;
        }
        return t;
    }

    friend Tensor operator*(const Scalar &s, const Tensor &t)
    {
        Tensor r(t.space_, t.truncation_);
        for (const auto &[idx, c] : t.terms_) {
            r.add_term(idx, s * c);
        }
        return r;
    }

    /// Concatenation product, discarding everything above the truncation degree.
    friend Tensor operator*(const Tensor &a, const Tensor &b)
    {
        a.check_compatible(b);
        Tensor r(a.space_, a.truncation_);
        for (const auto &[ia, ca] : a.terms_) {
            int room = a.truncation_ - static_cast<int>(ia.size());
            for (const auto &[ib, cb] : b.terms_) {
                // Terms are sorted by degree, so the rest of b is too long.
                if (static_cast<int>(ib.size()) > room) {
                    break;
                }
                MultiIndex k;
                k.reserve(ia.size() + ib.size());
                k.insert(k.end(), ia.begin(), ia.end());
                k.insert(k.end(), ib.begin(), ib.end());
                r.add_term(std::move(k), ca * cb);
            }
        }
        return r;
    }

    /// Truncated Neumann series; requires constant term 1.
    Tensor inverse() const
    {
        if (!(coefficient({}) == space_.one())) {
            throw NotUnitNormalized("tensor inverse requires constant term 1, got " + coefficient({}).to_string());
        }
        Tensor x = *this - one(space_, truncation_);
        Tensor minus_x = -x;
        Tensor result = one(space_, truncation_);
        Tensor power = result;
        for (int k = 1; k <= truncation_; ++k) {
            power = power * minus_x;
            if (power.is_zero()) {
                break;
            }
            result += power;
        }
        return result;
    }

    friend bool operator==(const Tensor &a, const Tensor &b)
    {
        return a.space_ == b.space_ && a.truncation_ == b.truncation_ && a.terms_ == b.terms_;
    }

    /// e.g. "1 + A1 - 2 A1 B1"
    std::string to_string() const
    {
        std::string out;
        for (const auto &[idx, c] : terms_) {
            std::string coef = c.to_string();
            bool negative = coef[0] == '-';
            if (negative) {
                coef.erase(0, 1);
            }
            if (out.empty()) {
                out += negative ? "-" : "";
            } else {
                out += negative ? " - " : " + ";
            }
            if (idx.empty()) {
                out += coef;
                continue;
            }
            if (coef != "1") {
                out += coef + " ";
            }
            for (std::size_t p = 0; p < idx.size(); ++p) {
                out += (p ? " " : "") + space_.sig.basis_name(idx[p]);
            }
        }
        return out.empty() ? "0" : out;
    }

private:
    void check_compatible(const Tensor &o) const
    {
        check_same_space(space_, o.space_);
        if (truncation_ != o.truncation_) {
            throw TruncationMismatch("truncation mismatch: " + std::to_string(truncation_) + " vs "
                                     + std::to_string(o.truncation_));
        }
    }

    Space space_;
    int truncation_ = 0;
    Terms terms_;
};

/// X Y - Y X for tensors X, Y.
inline Tensor bracket(const Tensor &x, const Tensor &y) { return x * y - y * x; }

/// Applies the linear map on H with integer matrix columns `m` (column j is the
/// image of basis vector j) to every tensor factor.
template <class Matrix>
Tensor apply_tensor_power(const Matrix &m, const Tensor &t)
{
    Tensor r(t.space(), t.truncation());
    const Space &sp = t.space();
    for (const auto &[idx, c] : t.terms()) {
        // Expand the product of column images factor by factor.
        std::vector<std::pair<MultiIndex, Scalar>> partial{{MultiIndex{}, c}};
        for (int f : idx) {
            std::vector<std::pair<MultiIndex, Scalar>> next;
            for (const auto &[k, v] : partial) {
                for (int row = 0; row < sp.dim(); ++row) {
                    const auto &entry = m[static_cast<std::size_t>(row)][static_cast<std::size_t>(f)];
                    if (entry == 0) {
                        continue;
                    }
                    MultiIndex k2 = k;
                    k2.push_back(row);
                    next.emplace_back(std::move(k2), v * Scalar::from_integer(sp.ring, entry));
                }
            }
            partial = std::move(next);
        }
        for (auto &[k, v] : partial) {
            r.add_term(std::move(k), v);
        }
    }
    return r;
}

} // namespace kframe

#endif
