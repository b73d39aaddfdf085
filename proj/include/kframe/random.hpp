#ifndef KFRAME_RANDOM_HPP
#define KFRAME_RANDOM_HPP

#include <string>
#include <utility>
#include <vector>

#include <kframe/mcg.hpp>
#include <kframe/qform.hpp>
#include <kframe/rng.hpp>

namespace kframe
{

/// Random reduced word with at most `max_len` letters before reduction.
inline Word random_word(const SurfaceSig &sig, Rng &rng, int max_len)
{
    std::vector<Letter> letters;
    if (sig.rank() > 0) {
        int len = static_cast<int>(rng.uniform(0, max_len));
        for (int k = 0; k < len; ++k) {
            letters.push_back({static_cast<int>(rng.uniform(0, sig.rank() - 1)), rng.coin()});
        }
    }
    return Word::reduce(sig, letters);
}

/// Unreduced letter sequence, for checks that must not depend on reduction.
inline std::vector<Letter> random_letters(const SurfaceSig &sig, Rng &rng, int max_len)
{
    std::vector<Letter> letters;
    if (sig.rank() > 0) {
        int len = static_cast<int>(rng.uniform(0, max_len));
        for (int k = 0; k < len; ++k) {
            letters.push_back({static_cast<int>(rng.uniform(0, sig.rank() - 1)), rng.coin()});
        }
    }
    return letters;
}

inline QuadraticForm random_form(const Space &space, Rng &rng)
{
    std::vector<Scalar> values;
    for (int x = 0; x < space.dim(); ++x) {
        values.push_back(space.integer(rng.uniform(-3, 3)));
    }
    return QuadraticForm(space, std::move(values));
}

inline DualVec random_dual(const Space &space, Rng &rng, bool nonzero = false)
{
    while (true) {
        DualVec u(space);
        for (int x = 0; x < space.dim(); ++x) {
            u[x] = space.integer(rng.uniform(-3, 3));
        }
        if (!nonzero || !u.is_zero() || space.dim() == 0) {
            return u;
        }
    }
}

/// A mapping class together with an expression that rebuilds it.
struct LabeledClass {
    std::string label;
    MappingClass phi;
};

namespace detail
{

inline LabeledClass random_twist(const SurfaceSig &sig, Rng &rng)
{
    int i = static_cast<int>(rng.uniform(1, sig.g));
    bool on_b = rng.coin();
    bool inv = rng.coin();
    MappingClass t = on_b ? twist_b(sig, i) : twist_a(sig, i);
    std::string label = std::string(on_b ? "twist_b:" : "twist_a:") + std::to_string(i) + (inv ? "^-1" : "");
    return {label, inv ? t.inverse() : t};
}

inline std::string inverse_label(const std::string &label)
{
    if (label.size() > 3 && label.compare(label.size() - 3, 3, "^-1") == 0) {
        return label.substr(0, label.size() - 3);
    }
    return label + "^-1";
}

/// A twist, or for g >= 2 a handle slide, or an inverse of either.
inline LabeledClass random_conjugator(const SurfaceSig &sig, Rng &rng)
{
    if (sig.g < 2 || rng.coin()) {
        return random_twist(sig, rng);
    }
    int i = static_cast<int>(rng.uniform(1, sig.g - 1));
    bool inv = rng.coin();
    MappingClass s = handle_slide(sig, i);
    return {"slide:" + std::to_string(i) + (inv ? "^-1" : ""), inv ? s.inverse() : s};
}

} // namespace detail

/// Product of 1..max_factors factors, each a twist along some a_i or b_i, its
/// inverse, or a conjugate of one by another twist or by a handle slide.
inline LabeledClass random_mapping_class(const SurfaceSig &sig, Rng &rng, int max_factors = 6)
{
    require_closed_boundary_case(sig, "random_mapping_class");
    if (sig.g < 1) {
        throw UnsupportedSignature("random_mapping_class needs g >= 1");
    }
    int factors = static_cast<int>(rng.uniform(1, max_factors));
    LabeledClass out{"", MappingClass::identity(sig)};
    for (int k = 0; k < factors; ++k) {
        LabeledClass f = detail::random_twist(sig, rng);
        std::string label = f.label;
        if (rng.uniform(0, 2) == 0) {
            LabeledClass c = detail::random_conjugator(sig, rng);
            f.phi = conjugate(c.phi, f.phi);
            label = c.label + " * " + f.label + " * " + detail::inverse_label(c.label);
        }
        out.phi = compose(out.phi, f.phi);
        out.label += (k ? " * " : "") + label;
    }
    return out;
}

} // namespace kframe

#endif
