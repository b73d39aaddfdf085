#ifndef KFRAME_HOMOLOGY_HPP
#define KFRAME_HOMOLOGY_HPP

#include <cstddef>
#include <string>
#include <type_traits>
#include <vector>

#include <kframe/surface.hpp>

namespace kframe
{

struct HomologyTag;
struct CohomologyTag;

/// Coordinate vector over the generator basis of H = H_1(surface; K)
/// (HomologyTag) or over its dual basis (CohomologyTag).
template <class Tag>
class BasisVector
{
public:
    BasisVector() = default;
    explicit BasisVector(const Space &space) : space_(space), coords_(space.dim(), space.zero()) {}

    static BasisVector basis(const Space &space, int gen, long long coef = 1)
    {
        space.sig.check_index(gen);
        BasisVector v(space);
        v.coords_[gen] = space.integer(coef);
        return v;
    }

    const Space &space() const noexcept { return space_; }
    int dim() const noexcept { return static_cast<int>(coords_.size()); }

    const Scalar &operator[](int i) const { return coords_.at(static_cast<std::size_t>(i)); }
    Scalar &operator[](int i) { return coords_.at(static_cast<std::size_t>(i)); }

    bool is_zero() const
    {
        for (const auto &c : coords_) {
            if (!c.is_zero()) {
                return false;
            }
        }
        return true;
    }

    BasisVector &operator+=(const BasisVector &o)
    {
        check_same_space(space_, o.space_);
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            coords_[i] += o.coords_[i];
        }
        return *this;
    }
    BasisVector &operator-=(const BasisVector &o)
    {
        check_same_space(space_, o.space_);
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            coords_[i] -= o.coords_[i];
        }
        return *this;
    }
    friend BasisVector operator+(BasisVector a, const BasisVector &b) { return a += b; }
    friend BasisVector operator-(BasisVector a, const BasisVector &b) { return a -= b; }
    BasisVector operator-() const
    {
        BasisVector r = *this;
        for (auto &c : r.coords_) {
            c = -c;
        }
        return r;
    }
    friend BasisVector operator*(const Scalar &s, BasisVector v)
    {
        for (auto &c : v.coords_) {
            c = s * c;
        }
        return v;
    }

    friend bool operator==(const BasisVector &a, const BasisVector &b)
    {
        return a.space_ == b.space_ && a.coords_ == b.coords_;
    }

    /// Human-readable form, e.g. "2A1 - B2" or "A1* - B1*".
    std::string to_string() const
    {
        std::string out;
        for (int i = 0; i < dim(); ++i) {
            const Scalar &c = coords_[static_cast<std::size_t>(i)];
            if (c.is_zero()) {
                continue;
            }
            std::string coef = c.to_string();
            bool negative = !coef.empty() && coef[0] == '-';
            if (negative) {
                coef.erase(0, 1);
            }
            if (out.empty()) {
                out += negative ? "-" : "";
            } else {
                out += negative ? " - " : " + ";
            }
            if (coef != "1") {
                out += coef;
                out += coef.find('/') != std::string::npos ? " " : "";
            }
            out += space_.sig.basis_name(i);
            if constexpr (std::is_same_v<Tag, CohomologyTag>) {
                out += "*";
            }
        }
        return out.empty() ? "0" : out;
    }

private:
    Space space_;
    std::vector<Scalar> coords_;
};

using HVec = BasisVector<HomologyTag>;
using DualVec = BasisVector<CohomologyTag>;

/// <f, X>
inline Scalar pair(const DualVec &f, const HVec &x)
{
    check_same_space(f.space(), x.space());
    Scalar s = f.space().zero();
    for (int i = 0; i < f.dim(); ++i) {
        if (!f[i].is_zero() && !x[i].is_zero()) {
            s += f[i] * x[i];
        }
    }
    return s;
}

} // namespace kframe

#endif
