#ifndef KFRAME_SURFACE_HPP
#define KFRAME_SURFACE_HPP

#include <string>

#include <kframe/error.hpp>
#include <kframe/scalar.hpp>

namespace kframe
{

/// The surface of genus g with n+1 boundary circles.
///
/// Its fundamental group is free on a1..ag, b1..bg, d1..dn. Generators and
/// homology basis vectors share one index space: a_i -> i-1, b_i -> g+i-1,
/// d_j -> 2g+j-1.
struct SurfaceSig {
    int g = 0;
    int n = 0;

    int rank() const noexcept { return 2 * g + n; }
    int euler_characteristic() const noexcept { return 1 - 2 * g - n; }

    int a(int i) const { return checked(i, g, "a") - 1; }
    int b(int i) const { return g + checked(i, g, "b") - 1; }
    int d(int j) const { return 2 * g + checked(j, n, "d") - 1; }

    bool is_a(int gen) const noexcept { return gen >= 0 && gen < g; }
    bool is_b(int gen) const noexcept { return gen >= g && gen < 2 * g; }
    bool is_d(int gen) const noexcept { return gen >= 2 * g && gen < rank(); }

    /// Lower-case generator name, e.g. "b2".
    std::string generator_name(int gen) const
    {
        check_index(gen);
        if (is_a(gen)) {
            return "a" + std::to_string(gen + 1);
        }
        if (is_b(gen)) {
            return "b" + std::to_string(gen - g + 1);
        }
        return "d" + std::to_string(gen - 2 * g + 1);
    }

    /// Upper-case homology basis name, e.g. "B2".
    std::string basis_name(int gen) const
    {
        std::string s = generator_name(gen);
        s[0] = static_cast<char>(s[0] - 'a' + 'A');
        return s;
    }

    /// Inverse of generator_name / basis_name (case-insensitive kind letter).
    int index_of(const std::string &name) const
    {
        if (name.size() < 2) {
            throw ParseError("bad generator name '" + name + "'", 0);
        }
        int k = 0;
        for (std::size_t p = 1; p < name.size(); ++p) {
            if (name[p] < '0' || name[p] > '9' || k > 100000) {
                throw ParseError("bad generator name '" + name + "'", p);
            }
            k = 10 * k + (name[p] - '0');
        }
        switch (name[0]) {
        case 'a':
        case 'A':
            return a(k);
        case 'b':
        case 'B':
            return b(k);
        case 'd':
        case 'D':
            return d(k);
        default:
            throw ParseError("bad generator name '" + name + "'", 0);
        }
    }

    void check_index(int gen) const
    {
        if (gen < 0 || gen >= rank()) {
            throw IndexOutOfRange("generator index " + std::to_string(gen) + " out of range for rank "
                                  + std::to_string(rank()));
        }
    }

    std::string to_string() const { return "(g=" + std::to_string(g) + ",n=" + std::to_string(n) + ")"; }

    friend bool operator==(const SurfaceSig &, const SurfaceSig &) = default;

private:
    static int checked(int i, int bound, const char *kind)
    {
        if (i < 1 || i > bound) {
            throw IndexOutOfRange(std::string(kind) + std::to_string(i) + " out of range (bound "
                                  + std::to_string(bound) + ")");
        }
        return i;
    }
};

/// A surface together with a coefficient ring; the ambient data of every
/// homology-valued object.
struct Space {
    SurfaceSig sig;
    RingSpec ring;

    int dim() const noexcept { return sig.rank(); }

    Scalar zero() const { return Scalar(ring); }
    Scalar one() const { return Scalar::one(ring); }
    Scalar integer(long long k) const { return Scalar::from_integer(ring, k); }

    friend bool operator==(const Space &, const Space &) = default;
};

inline void check_same_space(const Space &x, const Space &y)
{
    if (!(x.ring == y.ring)) {
        throw RingMismatch("ring mismatch: " + x.ring.to_string() + " vs " + y.ring.to_string());
    }
    if (!(x.sig == y.sig)) {
        throw SignatureMismatch("signature mismatch: " + x.sig.to_string() + " vs " + y.sig.to_string());
    }
}

inline void require_closed_boundary_case(const SurfaceSig &sig, const char *what)
{
    if (sig.n != 0) {
        throw UnsupportedSignature(std::string(what) + " requires n = 0, got " + sig.to_string());
    }
}

} // namespace kframe

#endif
