#ifndef KFRAME_MCG_HPP
#define KFRAME_MCG_HPP

#include <string>
#include <vector>

#include <kframe/homology.hpp>
#include <kframe/pairing.hpp>
#include <kframe/word.hpp>

namespace kframe
{

/// Square integer matrix acting on H by columns: column j is the image of basis vector j.
using IntMatrix = std::vector<std::vector<BigInt>>;

inline IntMatrix identity_matrix(int dim)
{
    IntMatrix m(static_cast<std::size_t>(dim), std::vector<BigInt>(static_cast<std::size_t>(dim), 0));
    for (int i = 0; i < dim; ++i) {
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    }
    return m;
}

inline IntMatrix operator*(const IntMatrix &a, const IntMatrix &b)
{
    std::size_t n = a.size();
    IntMatrix c(n, std::vector<BigInt>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                c[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    return c;
}

inline HVec apply_matrix(const IntMatrix &m, const HVec &x)
{
    HVec y(x.space());
    for (int r = 0; r < x.dim(); ++r) {
        for (int c = 0; c < x.dim(); ++c) {
            const BigInt &e = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            if (e != 0 && !x[c].is_zero()) {
                y[r] += Scalar::from_integer(x.space().ring, e) * x[c];
            }
        }
    }
    return y;
}

/// f o m, i.e. the transpose action on H*.
inline DualVec pull_back(const DualVec &f, const IntMatrix &m)
{
    DualVec g(f.space());
    for (int c = 0; c < f.dim(); ++c) {
        for (int r = 0; r < f.dim(); ++r) {
            const BigInt &e = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            if (e != 0 && !f[r].is_zero()) {
                g[c] += f[r] * Scalar::from_integer(f.space().ring, e);
            }
        }
    }
    return g;
}

/// A mapping class, presented as an automorphism of pi fixing the boundary
/// word, together with its inverse and its action on homology.
class MappingClass
{
public:
    MappingClass() = default;

    /// Validates and builds phi from generator images and preimages.
    ///
    /// Throws NotInverse, BoundaryNotFixed or NotSymplectic, checked in that order.
    static MappingClass create(const SurfaceSig &sig, std::vector<Word> fwd, std::vector<Word> bwd)
    {
        if (static_cast<int>(fwd.size()) != sig.rank() || static_cast<int>(bwd.size()) != sig.rank()) {
            throw SignatureMismatch("mapping class needs an image for every generator");
        }
        for (const auto &w : fwd) {
            check_sig(sig, w);
        }
        for (const auto &w : bwd) {
            check_sig(sig, w);
        }
        MappingClass phi(sig, std::move(fwd), std::move(bwd));
        for (int x = 0; x < sig.rank(); ++x) {
            Word gx = Word::generator(sig, x);
            if (!(phi.apply_inverse(phi.image(x)) == gx) || !(phi.apply(phi.preimage(x)) == gx)) {
                throw NotInverse("forward and backward maps are not mutually inverse on "
                                 + sig.generator_name(x));
            }
        }
        Word zeta = boundary_word(sig);
        if (!(phi.apply(zeta) == zeta)) {
            throw BoundaryNotFixed("boundary word maps to '" + phi.apply(zeta).to_string() + "'");
        }
        for (int x = 0; x < sig.rank(); ++x) {
            for (int y = 0; y < sig.rank(); ++y) {
                BigInt f = 0;
                for (int r = 0; r < sig.rank(); ++r) {
                    for (int s = 0; s < sig.rank(); ++s) {
                        int fb = flat_basis(sig, r, s);
                        if (fb != 0) {
                            f += fb * phi.h_[static_cast<std::size_t>(r)][static_cast<std::size_t>(x)]
                                 * phi.h_[static_cast<std::size_t>(s)][static_cast<std::size_t>(y)];
                        }
                    }
                }
                if (f != flat_basis(sig, x, y)) {
                    throw NotSymplectic("homology action does not preserve the intersection form");
                }
            }
        }
        return phi;
    }

    static MappingClass identity(const SurfaceSig &sig)
    {
        std::vector<Word> gens;
        for (int x = 0; x < sig.rank(); ++x) {
            gens.push_back(Word::generator(sig, x));
        }
        return MappingClass(sig, gens, gens);
    }

    const SurfaceSig &sig() const noexcept { return sig_; }
    const Word &image(int gen) const { return fwd_.at(static_cast<std::size_t>(gen)); }
    const Word &preimage(int gen) const { return bwd_.at(static_cast<std::size_t>(gen)); }
    const std::vector<Word> &images() const noexcept { return fwd_; }
    const std::vector<Word> &preimages() const noexcept { return bwd_; }

    /// |phi| on H, integer entries.
    const IntMatrix &hmatrix() const noexcept { return h_; }
    /// |phi|^-1 on H.
    const IntMatrix &hmatrix_inverse() const noexcept { return h_inv_; }

    Word apply(const Word &w) const { return substitute(w, fwd_); }
    Word apply_inverse(const Word &w) const { return substitute(w, bwd_); }

    MappingClass inverse() const { return MappingClass(sig_, bwd_, fwd_); }

    /// phi o psi: first psi, then phi.
    friend MappingClass compose(const MappingClass &phi, const MappingClass &psi)
    {
        if (!(phi.sig_ == psi.sig_)) {
            throw SignatureMismatch("composing mapping classes of different surfaces");
        }
        std::vector<Word> fwd, bwd;
        for (int x = 0; x < phi.sig_.rank(); ++x) {
            fwd.push_back(phi.apply(psi.image(x)));
            bwd.push_back(psi.apply_inverse(phi.preimage(x)));
        }
        return create(phi.sig_, std::move(fwd), std::move(bwd));
    }

    friend bool operator==(const MappingClass &a, const MappingClass &b)
    {
        return a.sig_ == b.sig_ && a.fwd_ == b.fwd_;
    }

private:
    MappingClass(const SurfaceSig &sig, std::vector<Word> fwd, std::vector<Word> bwd)
        : sig_(sig), fwd_(std::move(fwd)), bwd_(std::move(bwd))
    {
        h_ = class_matrix(fwd_);
        h_inv_ = class_matrix(bwd_);
    }

    static void check_sig(const SurfaceSig &sig, const Word &w)
    {
        if (!(w.sig() == sig)) {
            throw SignatureMismatch("generator image over " + w.sig().to_string() + ", expected " + sig.to_string());
        }
    }

    IntMatrix class_matrix(const std::vector<Word> &images) const
    {
        IntMatrix m(static_cast<std::size_t>(sig_.rank()), std::vector<BigInt>(static_cast<std::size_t>(sig_.rank()), 0));
        for (int c = 0; c < sig_.rank(); ++c) {
            for (const Letter &l : images[static_cast<std::size_t>(c)].letters()) {
                m[static_cast<std::size_t>(l.gen)][static_cast<std::size_t>(c)] += l.sign();
            }
        }
        return m;
    }

    Word substitute(const Word &w, const std::vector<Word> &table) const
    {
        if (!(w.sig() == sig_)) {
            throw SignatureMismatch("word " + w.sig().to_string() + " vs mapping class " + sig_.to_string());
        }
        Word out(sig_);
        for (const Letter &l : w.letters()) {
            const Word &img = table[static_cast<std::size_t>(l.gen)];
            out *= l.inverse ? img.inverse() : img;
        }
        return out;
    }

    SurfaceSig sig_;
    std::vector<Word> fwd_;
    std::vector<Word> bwd_;
    IntMatrix h_;
    IntMatrix h_inv_;
};

/// psi phi psi^-1
inline MappingClass conjugate(const MappingClass &psi, const MappingClass &phi)
{
    return compose(compose(psi, phi), psi.inverse());
}

namespace detail
{

inline MappingClass from_images(const SurfaceSig &sig, const std::vector<std::pair<int, std::string>> &fwd,
                                const std::vector<std::pair<int, std::string>> &bwd)
{
    std::vector<Word> f, b;
    for (int x = 0; x < sig.rank(); ++x) {
        f.push_back(Word::generator(sig, x));
        b.push_back(Word::generator(sig, x));
    }
    for (const auto &[x, w] : fwd) {
        f[static_cast<std::size_t>(x)] = parse_word(sig, w);
    }
    for (const auto &[x, w] : bwd) {
        b[static_cast<std::size_t>(x)] = parse_word(sig, w);
    }
    return MappingClass::create(sig, std::move(f), std::move(b));
}

inline std::string gen(const char *kind, int i) { return kind + std::to_string(i); }

} // namespace detail

/// The right-handed Dehn twist along a_i: b_i -> b_i a_i, everything else fixed.
inline MappingClass twist_a(const SurfaceSig &sig, int i)
{
    require_closed_boundary_case(sig, "twist_a");
    int b = sig.b(i);
    auto A = detail::gen("a", i);
    auto B = detail::gen("b", i);
    return detail::from_images(sig, {{b, B + " " + A}}, {{b, B + " " + A + "'"}});
}

/// a_i -> a_i b_i, everything else fixed. On homology this is A_i -> A_i + B_i,
/// the inverse of the right-handed twist along b_i.
inline MappingClass twist_b(const SurfaceSig &sig, int i)
{
    require_closed_boundary_case(sig, "twist_b");
    int a = sig.a(i);
    auto A = detail::gen("a", i);
    auto B = detail::gen("b", i);
    return detail::from_images(sig, {{a, A + " " + B}}, {{a, A + " " + B + "'"}});
}

/// Slides handle i over handle i+1; sends a_i to the simple loop a_i a_{i+1}.
///
/// Together with a_i and a_{i+1}, the image of a_i bounds a pair of pants.
inline MappingClass handle_slide(const SurfaceSig &sig, int i)
{
    require_closed_boundary_case(sig, "handle_slide");
    if (i < 1 || i + 1 > sig.g) {
        throw IndexOutOfRange("handle_slide needs 1 <= i < g");
    }
    auto a1 = detail::gen("a", i), b1 = detail::gen("b", i);
    auto a2 = detail::gen("a", i + 1), b2 = detail::gen("b", i + 1);
    return detail::from_images(sig,
                               {{sig.a(i), a1 + " " + a2},
                                {sig.b(i), a2 + "' " + b1 + " " + a2},
                                {sig.a(i + 1), a2 + "' " + b1 + " " + a2 + " " + b1 + "' " + a2},
                                {sig.b(i + 1), b2 + " " + a2 + "' " + b1 + "' " + a2}},
                               {{sig.a(i), a1 + " " + b1 + "' " + a2 + "' " + b1},
                                {sig.b(i), b1 + "' " + a2 + " " + b1 + " " + a2 + "' " + b1},
                                {sig.a(i + 1), b1 + "' " + a2 + " " + b1},
                                {sig.b(i + 1), b2 + " " + b1}});
}

} // namespace kframe

#endif
