#ifndef KFRAME_LINALG_HPP
#define KFRAME_LINALG_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <kframe/scalar.hpp>

namespace kframe
{

/// Outcome of an exact feasibility test for rows . u = rhs.
///
/// When infeasible, `certificate` is a vector y with y . rows = 0 (or, for a
/// divisibility obstruction, y . rows integral) and `discrepancy` = y . rhs != 0.
struct LinearSolution {
    bool feasible = false;
    std::vector<Scalar> solution;
    std::vector<Scalar> certificate;
    Scalar discrepancy;
    std::string obstruction; // "", "rank" or "divisibility"
};

/// U * A * V = D, D diagonal with d_0 | d_1 | ... and d_i > 0 for i < rank.
struct SmithForm {
    std::vector<std::vector<BigInt>> d, u, v;
    int rank = 0;
};

namespace detail
{

using BigMatrix = std::vector<std::vector<BigInt>>;

inline BigMatrix identity(std::size_t n)
{
    BigMatrix m(n, std::vector<BigInt>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        m[i][i] = 1;
    }
    return m;
}

inline BigInt abs_big(const BigInt &x) { return x < 0 ? BigInt(-x) : x; }

} // namespace detail

inline SmithForm smith_normal_form(const std::vector<std::vector<BigInt>> &a)
{
    using detail::abs_big;
    SmithForm s;
    std::size_t m = a.size();
    std::size_t k = m ? a[0].size() : 0;
    s.d = a;
    s.u = detail::identity(m);
    s.v = detail::identity(k);
    auto &d = s.d;
    auto row_axpy = [&](std::size_t dst, std::size_t src, const BigInt &q) { // row dst -= q row src
        for (std::size_t j = 0; j < k; ++j) {
            d[dst][j] -= q * d[src][j];
        }
        for (std::size_t j = 0; j < m; ++j) {
            s.u[dst][j] -= q * s.u[src][j];
        }
    };
    auto col_axpy = [&](std::size_t dst, std::size_t src, const BigInt &q) { // col dst -= q col src
        for (std::size_t i = 0; i < m; ++i) {
            d[i][dst] -= q * d[i][src];
        }
        for (std::size_t i = 0; i < k; ++i) {
            s.v[i][dst] -= q * s.v[i][src];
        }
    };
    auto swap_rows = [&](std::size_t x, std::size_t y) {
        std::swap(d[x], d[y]);
        std::swap(s.u[x], s.u[y]);
    };
    auto swap_cols = [&](std::size_t x, std::size_t y) {
        for (auto &row : d) {
            std::swap(row[x], row[y]);
        }
        for (auto &row : s.v) {
            std::swap(row[x], row[y]);
        }
    };

    std::size_t t = 0;
    for (; t < std::min(m, k); ++t) {
        while (true) {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            std::size_t pi = m, pj = k;
            for (std::size_t i = t; i < m; ++i) {
                for (std::size_t j = t; j < k; ++j) {
                    if (d[i][j] != 0 && (pi == m || abs_big(d[i][j]) < abs_big(d[pi][pj]))) {
                        pi = i;
                        pj = j;
                    }
                }
            }
            if (pi == m) {
                s.rank = static_cast<int>(t);
                return s;
            }
            swap_rows(t, pi);
            swap_cols(t, pj);
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (d[i][t] != 0) {
                    row_axpy(i, t, d[i][t] / d[t][t]);
                    clean = clean && d[i][t] == 0;
                }
            }
            for (std::size_t j = t + 1; j < k; ++j) {
                if (d[t][j] != 0) {
                    col_axpy(j, t, d[t][j] / d[t][t]);
                    clean = clean && d[t][j] == 0;
                }
            }
            if (!clean) {
                continue;
            }
            bool divides = true;
            for (std::size_t i = t + 1; i < m && divides; ++i) {
                for (std::size_t j = t + 1; j < k; ++j) {
                    if (d[i][j] % d[t][t] != 0) {
                        row_axpy(t, i, BigInt(-1));
                        divides = false;
                        break;
                    }
                }
            }
            if (divides) {
                break;
            }
        }
        if (d[t][t] < 0) {
            for (std::size_t j = 0; j < k; ++j) {
                d[t][j] = -d[t][j];
            }
            for (std::size_t j = 0; j < m; ++j) {
                s.u[t][j] = -s.u[t][j];
            }
        }
    }
    s.rank = static_cast<int>(t);
    return s;
}

namespace detail
{

// Over Q: returns a nonzero y with y . rows = 0 and y . rhs != 0 if one exists,
// scaled to a primitive integer vector whose first nonzero entry is positive.
inline std::vector<BigInt> rational_left_certificate(const std::vector<std::vector<Scalar>> &rows,
                                                     const std::vector<Scalar> &rhs, std::vector<Scalar> *solution)
{
    RingSpec q = RingSpec::rationals();
    std::size_t m = rows.size();
    std::size_t k = m ? rows[0].size() : 0;
    // Augmented [A | r | I_m] over Q.
    std::vector<std::vector<Scalar>> w(m, std::vector<Scalar>(k + 1 + m, Scalar(q)));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            w[i][j] = Scalar::from_fraction(q, rows[i][j].num(), rows[i][j].den());
        }
        w[i][k] = Scalar::from_fraction(q, rhs[i].num(), rhs[i].den());
        w[i][k + 1 + i] = Scalar::one(q);
    }
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < k && r < m; ++c) {
        std::size_t p = r;
        while (p < m && w[p][c].is_zero()) {
            ++p;
        }
        if (p == m) {
            continue;
        }
        std::swap(w[p], w[r]);
        Scalar inv = w[r][c].inverse();
        for (auto &e : w[r]) {
            e *= inv;
        }
        for (std::size_t i = 0; i < m; ++i) {
            if (i != r && !w[i][c].is_zero()) {
                Scalar f = w[i][c];
                for (std::size_t j = 0; j < w[i].size(); ++j) {
                    w[i][j] -= f * w[r][j];
                }
            }
        }
        pivot_cols.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < m; ++i) {
        if (w[i][k].is_zero()) {
            continue;
        }
        BigInt l = 1;
        for (std::size_t j = 0; j < m; ++j) {
            l = boost::multiprecision::lcm(l, w[i][k + 1 + j].den());
        }
        std::vector<BigInt> y(m);
        BigInt g = 0;
        for (std::size_t j = 0; j < m; ++j) {
            y[j] = w[i][k + 1 + j].num() * (l / w[i][k + 1 + j].den());
            g = boost::multiprecision::gcd(g, y[j]);
        }
        BigInt sign = 0;
        for (auto &e : y) {
            e /= g;
            if (sign == 0 && e != 0) {
                sign = e > 0 ? 1 : -1;
            }
        }
        for (auto &e : y) {
            e *= sign;
        }
        return y;
    }
    if (solution) {
        solution->assign(k, Scalar(q));
        for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
            (*solution)[pivot_cols[i]] = w[i][k];
        }
    }
    return {};
}

} // namespace detail

/// Decides exactly whether rows . u = rhs has a solution u over `ring`.
///
/// Q: Gaussian elimination. Z: Smith normal form. Z/m: Smith normal form of
/// the integer lift augmented by m * identity.
inline LinearSolution solve_linear(const RingSpec &ring, const std::vector<std::vector<Scalar>> &rows,
                                   const std::vector<Scalar> &rhs)
{
    if (rows.size() != rhs.size()) {
        throw PreconditionViolation("row count and right-hand side length differ");
    }
    std::size_t m = rows.size();
    std::size_t k = m ? rows[0].size() : 0;
    LinearSolution out;
    out.discrepancy = Scalar(ring);

    std::vector<Scalar> q_solution;
    auto y = detail::rational_left_certificate(rows, rhs, &q_solution);
    auto dot = [&](const std::vector<BigInt> &yy) {
        Scalar s(ring);
        for (std::size_t i = 0; i < m; ++i) {
            s += Scalar::from_integer(ring, yy[i]) * rhs[i];
        }
        return s;
    };
    if (!y.empty()) {
        Scalar disc = dot(y);
        // Over Z/m an integer left-kernel vector is a certificate only if its
        // discrepancy survives reduction.
        if (!disc.is_zero()) {
            out.obstruction = "rank";
            for (auto &e : y) {
                out.certificate.push_back(Scalar::from_integer(ring, e));
            }
            out.discrepancy = disc;
            return out;
        }
    }
    if (ring.kind() == RingSpec::Kind::Rationals) {
        out.feasible = true;
        out.solution = q_solution;
        return out;
    }

    // Integer lift, augmented by m * I over Z/m.
    bool modular = ring.kind() == RingSpec::Kind::Mod;
    std::size_t cols = k + (modular ? m : 0);
    std::vector<std::vector<BigInt>> a(m, std::vector<BigInt>(cols, 0));
    std::vector<BigInt> r(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            a[i][j] = rows[i][j].num();
        }
        if (modular) {
            a[i][k + i] = ring.modulus();
        }
        r[i] = rhs[i].num();
    }
    SmithForm s = smith_normal_form(a);
    std::vector<BigInt> ur(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            ur[i] += s.u[i][j] * r[j];
        }
    }
    std::vector<BigInt> v(cols, 0);
    for (std::size_t i = 0; i < m; ++i) {
        bool in_rank = static_cast<int>(i) < s.rank;
        bool ok = in_rank ? ur[i] % s.d[i][i] == 0 : ur[i] == 0;
        if (!ok) {
            // y = U_i / d_i has integral product with A but not with rhs.
            RingSpec qr = RingSpec::rationals();
            BigInt di = in_rank ? s.d[i][i] : BigInt(1);
            out.obstruction = in_rank ? "divisibility" : "rank";
            if (modular) {
                // m * y is an integer vector killing A mod m but not rhs.
                BigInt scale = ring.modulus();
                for (std::size_t j = 0; j < m; ++j) {
                    out.certificate.push_back(Scalar::from_integer(ring, s.u[i][j] * scale / di));
                }
                out.discrepancy = Scalar::from_integer(ring, ur[i] * scale / di);
            } else {
                for (std::size_t j = 0; j < m; ++j) {
                    out.certificate.push_back(Scalar::from_fraction(qr, s.u[i][j], di));
                }
                out.discrepancy = Scalar::from_fraction(qr, ur[i], di);
            }
            return out;
        }
        if (in_rank) {
            v[i] = ur[i] / s.d[i][i];
        }
    }
    out.feasible = true;
    for (std::size_t j = 0; j < k; ++j) {
        BigInt uj = 0;
        for (std::size_t c = 0; c < cols; ++c) {
            uj += s.v[j][c] * v[c];
        }
        out.solution.push_back(Scalar::from_integer(ring, uj));
    }
    return out;
}

} // namespace kframe

#endif
