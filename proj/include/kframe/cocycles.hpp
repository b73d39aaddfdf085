#ifndef KFRAME_COCYCLES_HPP
#define KFRAME_COCYCLES_HPP

#include <string>
#include <vector>

#include <kframe/expansion.hpp>
#include <kframe/linalg.hpp>
#include <kframe/mcg.hpp>
#include <kframe/pairing.hpp>
#include <kframe/qform.hpp>

namespace kframe
{

namespace detail
{

inline void check_form_and_class(const QuadraticForm &q, const MappingClass &phi)
{
    if (!(q.sig() == phi.sig())) {
        throw SignatureMismatch("form " + q.sig().to_string() + " vs mapping class " + phi.sig().to_string());
    }
    require_closed_boundary_case(q.sig(), "cocycle evaluation");
}

inline void check_expansion_and_class(const Expansion &theta, const MappingClass &phi)
{
    if (!(theta.sig() == phi.sig())) {
        throw SignatureMismatch("expansion " + theta.sig().to_string() + " vs mapping class " + phi.sig().to_string());
    }
    require_closed_boundary_case(theta.sig(), "cocycle evaluation");
}

} // namespace detail

/// X -> flat(X, c), the Poincare dual of the class c.
inline DualVec intersect_with(const HVec &c) { return -jmath(c); }

/// u o |phi|^-1
inline DualVec act_on_dual(const MappingClass &phi, const DualVec &u) { return pull_back(u, phi.hmatrix_inverse()); }

/// (delta u)(phi) = u o |phi|^-1 - u
inline DualVec coboundary(const DualVec &u, const MappingClass &phi) { return act_on_dual(phi, u) - u; }

/// The Earle cocycle k_q(phi) = q o phi^-1 - q, read off on the generator basis.
inline DualVec k_cocycle(const QuadraticForm &q, const MappingClass &phi)
{
    detail::check_form_and_class(q, phi);
    DualVec k(q.space());
    for (int x = 0; x < q.space().dim(); ++x) {
        k[x] = qf_eval(q, phi.preimage(x)) - q.generator_value(x);
    }
    return k;
}

/// q(phi^-1(w)) - q(w) for an arbitrary word.
inline Scalar k_on_word(const QuadraticForm &q, const MappingClass &phi, const Word &w)
{
    detail::check_form_and_class(q, phi);
    return qf_eval(q, phi.apply_inverse(w)) - qf_eval(q, w);
}

/// theta_2(w) - |phi|^{(x)2} theta_2(phi^-1(w))
inline Tensor tau1_on_word(const Expansion &theta, const MappingClass &phi, const Word &w)
{
    detail::check_expansion_and_class(theta, phi);
    return theta2_of(theta, w) - apply_tensor_power(phi.hmatrix(), theta2_of(theta, phi.apply_inverse(w)));
}

/// The extended first Johnson cocycle tau_1^theta(phi) in H* (x) H (x) H.
inline HomTensor tau1(const Expansion &theta, const MappingClass &phi)
{
    detail::check_expansion_and_class(theta, phi);
    std::vector<Tensor> slots;
    for (int x = 0; x < theta.space().dim(); ++x) {
        slots.push_back(tau1_on_word(theta, phi, Word::generator(theta.sig(), x)));
    }
    return HomTensor::from_slots(theta.space(), slots);
}

/// (f (x) s) -> (f o |phi|^-1) (x) |phi|^{(x)2} s
inline HomTensor cocycle_action(const MappingClass &phi, const HomTensor &t)
{
    if (!(phi.sig() == t.space().sig)) {
        throw SignatureMismatch("mapping class " + phi.sig().to_string() + " vs tensor " + t.space().sig.to_string());
    }
    const Space &sp = t.space();
    const IntMatrix &m = phi.hmatrix();
    const IntMatrix &minv = phi.hmatrix_inverse();
    HomTensor out(sp);
    for (int f = 0; f < sp.dim(); ++f) {
        Tensor s = apply_tensor_power(m, t.slot(f));
        if (s.is_zero()) {
            continue;
        }
        // f o M^-1 = sum_c (M^-1)[f][c] e*_c
        for (int c = 0; c < sp.dim(); ++c) {
            const BigInt &e = minv[static_cast<std::size_t>(f)][static_cast<std::size_t>(c)];
            if (e == 0) {
                continue;
            }
            Scalar coef = Scalar::from_integer(sp.ring, e);
            for (const auto &[idx, v] : s.terms()) {
                out.add_term({c, idx[0], idx[1]}, coef * v);
            }
        }
    }
    return out;
}

/// Two sides of a claimed identity between H*-valued quantities.
struct DualComparison {
    DualVec lhs;
    DualVec rhs;

    bool equal() const { return lhs == rhs; }
    DualVec defect() const { return rhs - lhs; }
};

/// (1 (x) flat) tau_1^theta(phi) against -k_{q_theta}(phi).
inline DualComparison verify_nutau(const Expansion &theta, const MappingClass &phi)
{
    return {one_tensor_flat(tau1(theta, phi)), -k_cocycle(from_expansion(theta), phi)};
}

/// (1 (x) flat) tau_1^theta(phi) against jmath(contract(tau_1^theta(phi))).
/// Equal whenever theta is weakly 3-symplectic; the defect is rhs - lhs.
inline DualComparison verify_tauc(const Expansion &theta, const MappingClass &phi)
{
    HomTensor t = tau1(theta, phi);
    return {one_tensor_flat(t), jmath(contract(t))};
}

/// The same comparison with the switched contraction f (x) X1 X2 -> f(X2) X1.
inline DualComparison switched_contraction_comparison(const Expansion &theta, const MappingClass &phi)
{
    HomTensor t = tau1(theta, phi);
    return {one_tensor_flat(t), jmath(contract_switched(t))};
}

/// (flat (x) B*_i) applied to a degree-3 tensor.
inline Scalar flat_times_dual_b(const Tensor &t3, int i)
{
    const SurfaceSig &sig = t3.space().sig;
    int b = sig.b(i);
    Scalar s = t3.space().zero();
    for (const auto &[idx, c] : t3.terms()) {
        if (idx.size() != 3 || idx[2] != b) {
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

/// Predicted value of jmath(contract(tau)) - (1 (x) flat)(tau) at twist_a(i):
/// -((flat (x) B*_i) theta_3(zeta)) B*_i, from the closed form of theta_3(zeta).
inline DualVec tauc_defect_closed_form(const Expansion &theta, int i)
{
    require_closed_boundary_case(theta.sig(), "tauc_defect_closed_form");
    Scalar e = flat_times_dual_b(theta3_zeta_closed_form(theta), i);
    return -e * DualVec::basis(theta.space(), theta.sig().b(i));
}

/// k_q(twist_a(i)) against (q(a_i) - 1) (. [A_i]).
inline DualComparison verify_dehn_twist_lemma(const QuadraticForm &q, int i)
{
    require_closed_boundary_case(q.sig(), "verify_dehn_twist_lemma");
    const SurfaceSig &sig = q.sig();
    MappingClass t = twist_a(sig, i);
    Scalar rot = rot_of_simple(q, Word::generator(sig, sig.a(i)));
    return {k_cocycle(q, t), rot * intersect_with(HVec::basis(q.space(), sig.a(i)))};
}

/// A mapping class carrying a_1 to a simple loop in the class B_1 (genus one):
/// the inverse of T_a T_b T_a with T_b the right-handed twist along b_1.
inline MappingClass genus_one_b_carrier(const SurfaceSig &sig)
{
    MappingClass ta = twist_a(sig, 1);
    MappingClass tb_right = twist_b(sig, 1).inverse();
    return compose(ta, compose(tb_right, ta)).inverse();
}

struct CoboundaryCase {
    std::string label;
    DualComparison values; // lhs = k_q(phi), rhs = (delta u)(phi)
};

struct GenusOneReport {
    DualVec u;
    Scalar rot_alpha;
    Scalar rot_beta;
    std::vector<CoboundaryCase> cases;

    bool all_equal() const
    {
        for (const auto &c : cases) {
            if (!c.values.equal()) {
                return false;
            }
        }
        return true;
    }
};

/// Checks k_q = delta u on the supplied mapping classes for
/// u = -rot(beta) (. [A_1]) + rot(alpha) (. [B_1]).
///
/// rot(alpha) = q(a_1) - 1. rot(beta) is read off the simple loop
/// genus_one_b_carrier(a_1) in the class B_1; the based loop b_1 itself is not
/// of the same local type at the basepoint as a_1.
inline GenusOneReport genus_one_coboundary_check(const QuadraticForm &q,
                                                 const std::vector<std::pair<std::string, MappingClass>> &classes)
{
    const SurfaceSig &sig = q.sig();
    if (sig.g != 1 || sig.n != 0) {
        throw UnsupportedSignature("genus_one_coboundary_check needs g = 1, n = 0, got " + sig.to_string());
    }
    GenusOneReport rep;
    Word a1 = Word::generator(sig, sig.a(1));
    rep.rot_alpha = rot_of_simple(q, a1);
    rep.rot_beta = rot_of_simple(q, genus_one_b_carrier(sig).apply(a1));
    HVec A = HVec::basis(q.space(), sig.a(1));
    HVec B = HVec::basis(q.space(), sig.b(1));
    rep.u = -rep.rot_beta * intersect_with(A) + rep.rot_alpha * intersect_with(B);
    for (const auto &[label, phi] : classes) {
        rep.cases.push_back({label, {k_cocycle(q, phi), coboundary(rep.u, phi)}});
    }
    return rep;
}

/// A simple closed curve presented as phi(a_i).
struct CurveSpec {
    std::string label;
    MappingClass phi;
    int index = 1;
};

struct CertificateReport {
    std::vector<std::string> labels;
    std::vector<HVec> classes;
    std::vector<Scalar> rotations;
    LinearSolution solution;

    bool infeasible() const { return !solution.feasible; }
};

/// Builds <u, [phi_k(a_{i_k})]> = q(phi_k(a_{i_k})) - 1 and decides exactly
/// whether some u in H* satisfies all of them. An infeasible system shows that
/// k_q is not a coboundary on the twists along these curves.
inline CertificateReport nontriviality_certificate(const QuadraticForm &q, const std::vector<CurveSpec> &curves)
{
    const SurfaceSig &sig = q.sig();
    if (sig.g < 2 || sig.n != 0) {
        throw UnsupportedSignature("nontriviality_certificate needs g >= 2, n = 0, got " + sig.to_string());
    }
    if (curves.empty()) {
        throw EmptyCurveList("nontriviality_certificate needs at least one curve");
    }
    CertificateReport rep;
    std::vector<std::vector<Scalar>> rows;
    for (const auto &c : curves) {
        if (!(c.phi.sig() == sig)) {
            throw SignatureMismatch("curve mapping class on " + c.phi.sig().to_string());
        }
        Word w = c.phi.apply(Word::generator(sig, sig.a(c.index)));
        HVec cls = homology_class(w, q.ring());
        std::vector<Scalar> row;
        for (int x = 0; x < cls.dim(); ++x) {
            row.push_back(cls[x]);
        }
        rows.push_back(std::move(row));
        rep.labels.push_back(c.label);
        rep.classes.push_back(cls);
        rep.rotations.push_back(rot_of_simple(q, w));
    }
    rep.solution = solve_linear(q.ring(), rows, rep.rotations);
    return rep;
}

/// The three boundary curves of the pair of pants spanned by a_1 and a_2:
/// a_1, a_2 and a_1 a_2 = handle_slide(1)(a_1).
inline std::vector<CurveSpec> pants_curves(const SurfaceSig &sig)
{
    MappingClass id = MappingClass::identity(sig);
    return {{"a1", id, 1}, {"a2", id, 2}, {"slide1(a1)", handle_slide(sig, 1), 1}};
}

struct InjectivityReport {
    bool found = false;
    std::string twist;
    DualVec k_q;
    DualVec k_shifted;
};

/// Finds a twist t among twist_a(i), twist_b(i) with k_{q+u}(t) != k_q(t).
inline InjectivityReport cor_kK_injectivity_check(const QuadraticForm &q, const DualVec &u)
{
    const SurfaceSig &sig = q.sig();
    if (sig.g < 1 || sig.n != 0) {
        throw UnsupportedSignature("cor_kK_injectivity_check needs g >= 1, n = 0, got " + sig.to_string());
    }
    if (u.is_zero()) {
        throw PreconditionViolation("cor_kK_injectivity_check needs u != 0");
    }
    QuadraticForm shifted = torsor_add(q, u);
    InjectivityReport rep;
    for (int i = 1; i <= sig.g; ++i) {
        for (int kind = 0; kind < 2; ++kind) {
            MappingClass t = kind == 0 ? twist_a(sig, i) : twist_b(sig, i);
            DualVec k0 = k_cocycle(q, t);
            DualVec k1 = k_cocycle(shifted, t);
            if (!(k0 == k1)) {
                rep.found = true;
                rep.twist = (kind == 0 ? "twist_a:" : "twist_b:") + std::to_string(i);
                rep.k_q = k0;
                rep.k_shifted = k1;
                return rep;
            }
        }
    }
    return rep;
}

} // namespace kframe

#endif
