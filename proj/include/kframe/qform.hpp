#ifndef KFRAME_QFORM_HPP
#define KFRAME_QFORM_HPP

#include <span>
#include <string>
#include <vector>

#include <kframe/expansion.hpp>
#include <kframe/homology.hpp>
#include <kframe/pairing.hpp>
#include <kframe/word.hpp>

namespace kframe
{

/// A K-quadratic form on pi: q(uv) = q(u) + q(v) + flat([u], [v]).
///
/// Such a form is determined by its values on the free generators, which is
/// all that is stored; the set of forms is a torsor over H* = H^1(surface; K).
class QuadraticForm
{
public:
    QuadraticForm() = default;

    QuadraticForm(const Space &space, std::vector<Scalar> values) : space_(space), values_(std::move(values))
    {
        if (static_cast<int>(values_.size()) != space.dim()) {
            throw SignatureMismatch("quadratic form needs " + std::to_string(space.dim()) + " generator values");
        }
        for (const auto &v : values_) {
            if (!(v.ring() == space.ring)) {
                throw RingMismatch("generator value in " + v.ring().to_string() + ", form over "
                                   + space.ring.to_string());
            }
        }
    }

    const Space &space() const noexcept { return space_; }
    const SurfaceSig &sig() const noexcept { return space_.sig; }
    const RingSpec &ring() const noexcept { return space_.ring; }

    const Scalar &generator_value(int gen) const { return values_.at(static_cast<std::size_t>(gen)); }
    const std::vector<Scalar> &generator_values() const noexcept { return values_; }

    friend bool operator==(const QuadraticForm &a, const QuadraticForm &b)
    {
        return a.space_ == b.space_ && a.values_ == b.values_;
    }

    std::string to_string() const
    {
        std::string out;
        for (int x = 0; x < space_.dim(); ++x) {
            out += (x ? ", " : "") + space_.sig.generator_name(x) + "=" + values_[static_cast<std::size_t>(x)].to_string();
        }
        return "{" + out + "}";
    }

private:
    Space space_;
    std::vector<Scalar> values_;
};

/// Left fold over an arbitrary (possibly unreduced) letter sequence:
/// q(u x) = q(u) + q(x) + flat([u], [x]) with q(x^-1) = -q(x).
inline Scalar qf_eval(const QuadraticForm &q, std::span<const Letter> letters)
{
    const Space &sp = q.space();
    const SurfaceSig &sig = sp.sig;
    Scalar value = sp.zero();
    // Only the A/B coordinates of [u] matter for the intersection term.
    std::vector<long long> cls(static_cast<std::size_t>(sp.dim()), 0);
    long long cross = 0;
    for (const Letter &l : letters) {
        sig.check_index(l.gen);
        const Scalar &gv = q.generator_value(l.gen);
        value += l.inverse ? -gv : gv;
        if (!sig.is_d(l.gen)) {
            int partner = sig.is_a(l.gen) ? l.gen + sig.g : l.gen - sig.g;
            // flat([u], e_x) picks the partner coordinate of [u].
            long long f = static_cast<long long>(flat_basis(sig, partner, l.gen)) * cls[static_cast<std::size_t>(partner)];
            cross += l.sign() * f;
        }
        cls[static_cast<std::size_t>(l.gen)] += l.sign();
    }
    return value + sp.integer(cross);
}

inline Scalar qf_eval(const QuadraticForm &q, const Word &w)
{
    if (!(w.sig() == q.sig())) {
        throw SignatureMismatch("word " + w.sig().to_string() + " vs form " + q.sig().to_string());
    }
    return qf_eval(q, std::span<const Letter>(w.letters()));
}

/// Morita's form d: zero on every a_i and b_i.
inline QuadraticForm morita_d(const SurfaceSig &sig, const RingSpec &ring)
{
    require_closed_boundary_case(sig, "morita_d");
    Space sp{sig, ring};
    return QuadraticForm(sp, std::vector<Scalar>(static_cast<std::size_t>(sig.rank()), sp.zero()));
}

/// The form flat o theta_2.
inline QuadraticForm from_expansion(const Expansion &theta)
{
    require_closed_boundary_case(theta.sig(), "from_expansion");
    std::vector<Scalar> values;
    for (int x = 0; x < theta.space().dim(); ++x) {
        values.push_back(flat(theta.theta2(x)));
    }
    return QuadraticForm(theta.space(), std::move(values));
}

/// (q + u)(w) = q(w) + <u, [w]>
inline QuadraticForm torsor_add(const QuadraticForm &q, const DualVec &u)
{
    check_same_space(q.space(), u.space());
    std::vector<Scalar> values = q.generator_values();
    for (int x = 0; x < u.dim(); ++x) {
        values[static_cast<std::size_t>(x)] += u[x];
    }
    return QuadraticForm(q.space(), std::move(values));
}

/// The unique u with q_new = q_old + u.
inline DualVec torsor_diff(const QuadraticForm &q_new, const QuadraticForm &q_old)
{
    check_same_space(q_new.space(), q_old.space());
    DualVec u(q_new.space());
    for (int x = 0; x < u.dim(); ++x) {
        u[x] = q_new.generator_value(x) - q_old.generator_value(x);
    }
    return u;
}

/// Rotation number of a loop the caller asserts to be simple and of the same
/// local type at the basepoint as a generator a_i: q(w) - 1. Simplicity is not
/// checked.
inline Scalar rot_of_simple(const QuadraticForm &q, const Word &w) { return qf_eval(q, w) - q.space().one(); }

/// Coordinates of the lifted class in H_1(UΣ; Z) = H ⊕ Z z under the splitting given by a Z-form.
struct LambdaCoord {
    HVec h;
    Scalar z;

    friend bool operator==(const LambdaCoord &, const LambdaCoord &) = default;
};

inline LambdaCoord lambda_coords(const QuadraticForm &q_int, const Word &w)
{
    if (q_int.ring().kind() != RingSpec::Kind::Integers) {
        throw RingMismatch("lambda_coords needs a form over Z, got " + q_int.ring().to_string());
    }
    return {homology_class(w, q_int.ring()), qf_eval(q_int, w)};
}

} // namespace kframe

#endif
