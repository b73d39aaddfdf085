#ifndef KFRAME_RELF_HPP
#define KFRAME_RELF_HPP

#include <string>
#include <vector>

#include <kframe/qform.hpp>

namespace kframe
{

/// Rotation numbers (rho_0, ..., rho_n), one per boundary component; rho_0 is
/// the outer boundary.
struct RotVector {
    std::vector<Scalar> rho;

    std::string to_string() const
    {
        std::string out = "(";
        for (std::size_t j = 0; j < rho.size(); ++j) {
            out += (j ? ", " : "") + rho[j].to_string();
        }
        return out + ")";
    }

    friend bool operator==(const RotVector &, const RotVector &) = default;
};

/// rho_j = q(d_j) - 1 for j >= 1, rho_0 = q(w^-1) + 1 with w the boundary word.
inline RotVector rot_vector(const QuadraticForm &q)
{
    const SurfaceSig &sig = q.sig();
    RotVector r;
    r.rho.push_back(qf_eval(q, boundary_word(sig).inverse()) + q.space().one());
    for (int j = 1; j <= sig.n; ++j) {
        r.rho.push_back(q.generator_value(sig.d(j)) - q.space().one());
    }
    return r;
}

inline Scalar rot_sum(const RotVector &r, const RingSpec &ring)
{
    Scalar s(ring);
    for (const auto &x : r.rho) {
        s += x;
    }
    return s;
}

struct PhReport {
    RotVector rho;
    Scalar sum;
    Scalar chi;

    bool pass() const { return sum == chi; }
};

inline PhReport ph_check(const QuadraticForm &q)
{
    PhReport rep;
    rep.rho = rot_vector(q);
    rep.sum = rot_sum(rep.rho, q.ring());
    rep.chi = q.space().integer(q.sig().euler_characteristic());
    return rep;
}

/// Whether some relative framing realizes the boundary rotation numbers rho.
inline bool feasible(const SurfaceSig &sig, const RingSpec &ring, const RotVector &r)
{
    if (static_cast<int>(r.rho.size()) != sig.n + 1) {
        throw SignatureMismatch("rotation vector needs " + std::to_string(sig.n + 1) + " entries, got "
                                + std::to_string(r.rho.size()));
    }
    for (const auto &x : r.rho) {
        if (!(x.ring() == ring)) {
            throw RingMismatch("rotation number in " + x.ring().to_string() + ", expected " + ring.to_string());
        }
    }
    return rot_sum(r, ring) == Scalar::from_integer(ring, sig.euler_characteristic());
}

struct ShiftReport {
    std::vector<Scalar> measured;  // rot(q + u) - rot(q)
    std::vector<Scalar> predicted; // <u, -(D_1 + ... + D_n)>, <u, D_1>, ..., <u, D_n>

    bool pass() const { return measured == predicted; }
    bool fixes_rotations() const
    {
        for (const auto &x : predicted) {
            if (!x.is_zero()) {
                return false;
            }
        }
        return true;
    }
};

inline ShiftReport shift_report(const QuadraticForm &q, const DualVec &u)
{
    const SurfaceSig &sig = q.sig();
    RotVector before = rot_vector(q);
    RotVector after = rot_vector(torsor_add(q, u));
    ShiftReport rep;
    Scalar outer(q.ring());
    for (int j = 1; j <= sig.n; ++j) {
        outer -= u[sig.d(j)];
    }
    rep.predicted.push_back(outer);
    for (int j = 1; j <= sig.n; ++j) {
        rep.predicted.push_back(u[sig.d(j)]);
    }
    for (std::size_t j = 0; j < before.rho.size(); ++j) {
        rep.measured.push_back(after.rho[j] - before.rho[j]);
    }
    return rep;
}

} // namespace kframe

#endif
