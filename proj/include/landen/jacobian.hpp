#pragma once

/**
 * @file jacobian.hpp
 * @brief Block structure of the Jacobian of the projective map, the lemmas on
 * its blocks, and determinant-monomial certificates.
 *
 * Rows index variables (a_0..a_d, then b_0..b_d); columns index the
 * z-coefficients (z^d first) of G, then of H. Hence J = [[A, 0], [C, D]]
 * with A = dG/da, C = dG/db, D = dH/db.
 */

#include <string>
#include <vector>

#include "elimination.hpp"
#include "matrix.hpp"

namespace landen {

using PolyMatrix = Matrix<MultiPoly<Integer>>;

struct JacobianBlocks {
    int d = 0, m = 0, k = 0;
    PolyMatrix A, C, D;

    /// The full (2d+2) x (2d+2) matrix.
    PolyMatrix full() const {
        const std::size_t n = A.size();
        const MultiPoly<Integer> zero(A[0][0].vars());
        PolyMatrix J(2 * n, std::vector<MultiPoly<Integer>>(2 * n, zero));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                J[i][j] = A[i][j];
                J[n + i][j] = C[i][j];
                J[n + i][n + j] = D[i][j];
            }
        }
        return J;
    }
};

inline void jacobian_guard(int d, int m, int k) {
    check_index(d, m, k);
    if (d < 1 || d > 3 || m > 4) throw guard_exceeded("jacobian limited to 1 <= d <= 3, m <= 4");
}

namespace detail {

inline PolyMatrix derivative_block(const MultiPoly<Integer>& p, int d, std::size_t first_var) {
    PolyMatrix M;
    for (int i = 0; i <= d; ++i) M.push_back(z_coefficients(derivative(p, first_var + static_cast<std::size_t>(i)), d));
    return M;
}

}  // namespace detail

inline JacobianBlocks jacobian_blocks(int d, int m, int k) {
    jacobian_guard(d, m, k);
    const auto& P = generic_gh(d, m, k);
    return {d, m, k, detail::derivative_block(P.G, d, a_index(0)), detail::derivative_block(P.G, d, b_index(d, 0)),
            detail::derivative_block(P.H, d, b_index(d, 0))};
}

/// A' : A without its first row and column. A has no a-dependence, so a_0 = 0 is a no-op.
inline PolyMatrix restricted_A(const PolyMatrix& A) { return submatrix(A, 0, 0); }

inline std::string cell_name(const char* block, std::size_t i, std::size_t j) {
    return std::string(block) + "[" + std::to_string(i) + "][" + std::to_string(j) + "]";
}

/// D_{d,m} = m A_{d,m,0}.
inline CheckReport check_D_eq_mA(int d, int m) {
    CheckReport rep{"D=mA", "d=" + std::to_string(d) + ",m=" + std::to_string(m), "symbolic", 1, {}, {}};
    auto J = jacobian_blocks(d, m, 0);
    for (std::size_t i = 0; i < J.A.size(); ++i) {
        for (std::size_t j = 0; j < J.A.size(); ++j) {
            if (!(J.D[i][j] == J.A[i][j] * Integer(m))) rep.fail(cell_name("D", i, j) + " = " + J.D[i][j].to_string());
        }
    }
    return rep;
}

/// The z-coefficients of G equal A^T a: G = sum_j (sum_i a_i A_ij) z^(d-j).
inline CheckReport linear_structure_check(int d, int m, int k) {
    CheckReport rep{"G=Aa", "d=" + std::to_string(d) + ",m=" + std::to_string(m) + ",k=" + std::to_string(k), "symbolic",
                    1, {}, {}};
    auto J = jacobian_blocks(d, m, k);
    auto g = z_coefficients(generic_gh(d, m, k).G, d);
    auto a = coefficient_variables(d, 'a');
    for (int j = 0; j <= d; ++j) {
        MultiPoly<Integer> s(landen_vars(d));
        for (int i = 0; i <= d; ++i) s += a[static_cast<std::size_t>(i)] * J.A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (!(s == g[static_cast<std::size_t>(j)])) rep.fail("column " + std::to_string(j));
    }
    return rep;
}

inline std::vector<std::size_t> b_variables(int d) {
    std::vector<std::size_t> v;
    for (int i = 0; i <= d; ++i) v.push_back(b_index(d, i));
    return v;
}

/// Entries of A: b-degree m-1 and weight mj-i-k; det A: degree (m-1)(d+1)
/// and weight (m-1)(d^2+d)/2 - k(d+1).
inline CheckReport entry_grading_check(int d, int m, int k) {
    CheckReport rep{"A-gradings", "d=" + std::to_string(d) + ",m=" + std::to_string(m) + ",k=" + std::to_string(k),
                    "symbolic", 1, {}, {}};
    auto J = jacobian_blocks(d, m, k);
    const auto bv = b_variables(d);
    const auto w = WeightSystem::canonical(d, 0);
    for (std::size_t i = 0; i < J.A.size(); ++i) {
        for (std::size_t j = 0; j < J.A.size(); ++j) {
            const auto& e = J.A[i][j];
            if (e.is_zero()) continue;
            auto deg = degree_grading(e, bv);
            auto wt = weight_grading(e, w);
            const long want_wt = static_cast<long>(m) * static_cast<long>(j) - static_cast<long>(i) - k;
            if (deg.grade != std::optional<long>(m - 1)) rep.fail(cell_name("A", i, j) + " degree");
            if (wt.grade != std::optional<long>(want_wt)) rep.fail(cell_name("A", i, j) + " weight");
        }
    }
    auto det = det_bareiss(J.A);
    if (!det.is_zero()) {
        if (degree_grading(det, bv).grade != std::optional<long>((m - 1) * (d + 1))) rep.fail("det A degree");
        if (weight_grading(det, w).grade != std::optional<long>((m - 1) * (d * d + d) / 2 - k * (d + 1))) {
            rep.fail("det A weight");
        }
    } else {
        rep.note("det A = 0");
    }
    return rep;
}

inline Monomial b_monomial(int d, const std::vector<std::uint32_t>& e) {
    Monomial mono(landen_vars(d).size());
    for (int i = 0; i <= d; ++i) mono.exps[b_index(d, i)] = e[static_cast<std::size_t>(i)];
    return mono;
}

/**
 * k = 0: below-diagonal entries of column j of A vanish mod I_j = (b_0..b_{j-1})
 * and A_jj = (-1)^((m+1)(d-j)) b_j^(m-1) mod I_j.
 * k >= 1, on A' (original indices 1..d): the same with
 * I'_j = (b_0..b_{j-2}, b_{j-1}^(k+1)) and diagonal (-1)^((m+1)(d-j)+k) b_{j-1}^k b_j^(m-1-k).
 */
inline CheckReport triangularity_check(int d, int m, int k) {
    CheckReport rep{"triangularity", "d=" + std::to_string(d) + ",m=" + std::to_string(m) + ",k=" + std::to_string(k),
                    "symbolic", 1, {}, {}};
    auto J = jacobian_blocks(d, m, k);
    const VarSet& V = landen_vars(d);
    const int first = k == 0 ? 0 : 1;
    for (int j = first; j <= d; ++j) {
        std::vector<Monomial> ideal;
        std::vector<std::uint32_t> diag(static_cast<std::size_t>(d + 1), 0);
        int sign_exp = (m + 1) * (d - j);
        if (k == 0) {
            for (int t = 0; t < j; ++t) {
                std::vector<std::uint32_t> e(static_cast<std::size_t>(d + 1), 0);
                e[static_cast<std::size_t>(t)] = 1;
                ideal.push_back(b_monomial(d, e));
            }
            diag[static_cast<std::size_t>(j)] = static_cast<std::uint32_t>(m - 1);
        } else {
            for (int t = 0; t < j; ++t) {
                std::vector<std::uint32_t> e(static_cast<std::size_t>(d + 1), 0);
                e[static_cast<std::size_t>(t)] = t == j - 1 ? static_cast<std::uint32_t>(k + 1) : 1;
                ideal.push_back(b_monomial(d, e));
            }
            diag[static_cast<std::size_t>(j - 1)] = static_cast<std::uint32_t>(k);
            diag[static_cast<std::size_t>(j)] = static_cast<std::uint32_t>(m - 1 - k);
            sign_exp += k;
        }
        const auto col = static_cast<std::size_t>(j);
        for (int i = j + 1; i <= d; ++i) {
            auto r = reduce_mod_monomials(J.A[static_cast<std::size_t>(i)][col], ideal);
            if (!r.is_zero()) rep.fail(cell_name("A", static_cast<std::size_t>(i), col) + " = " + r.to_string() + " mod I_" + std::to_string(j));
        }
        auto r = reduce_mod_monomials(J.A[col][col], ideal);
        auto want = MultiPoly<Integer>::term(V, b_monomial(d, diag), Integer(sign_power(sign_exp)));
        if (!(r == want)) rep.fail(cell_name("A", col, col) + " = " + r.to_string() + " mod I_" + std::to_string(j) + ", expected " + want.to_string());
    }
    return rep;
}

/// Monomial (b_0..b_d)^(m-1) in det A (k = 0), or b_0^k (b_1..b_{d-1})^(m-1) b_d^(m-1-k) in det A' (k >= 1).
inline std::vector<std::uint32_t> det_monomial_exponents(int d, int m, int k) {
    std::vector<std::uint32_t> e(static_cast<std::size_t>(d + 1), static_cast<std::uint32_t>(m - 1));
    if (k > 0) {
        e[0] = static_cast<std::uint32_t>(k);
        e[static_cast<std::size_t>(d)] = static_cast<std::uint32_t>(m - 1 - k);
    }
    return e;
}

inline int det_monomial_sign(int d, int m, int k) {
    if (k == 0) return sign_power(static_cast<long>(m + 1) * (d * d + d) / 2);
    return sign_power(static_cast<long>(m + 1) * (d * d - d) / 2 + static_cast<long>(d) * k);
}

/// det A (k = 0) or det A' (k >= 1): the matrix the lemmas speak about.
inline MultiPoly<Integer> lemma_determinant(const JacobianBlocks& J) {
    return J.k == 0 ? det_bareiss(J.A) : det_bareiss(restricted_A(J.A));
}

inline CheckReport det_monomial_check(int d, int m, int k) {
    CheckReport rep{"det-monomial", "d=" + std::to_string(d) + ",m=" + std::to_string(m) + ",k=" + std::to_string(k),
                    "symbolic", 1, {}, {}};
    auto J = jacobian_blocks(d, m, k);
    auto det = lemma_determinant(J);
    auto c = det.coefficient(b_monomial(d, det_monomial_exponents(d, m, k)));
    const Integer want(det_monomial_sign(d, m, k));
    if (!(c == want)) rep.fail("coefficient " + c.to_string() + ", expected " + want.to_string());
    return rep;
}

/// det J = det A det D.
inline MultiPoly<Integer> jacobian_det(int d, int m, int k) {
    auto J = jacobian_blocks(d, m, k);
    return det_bareiss(J.A) * det_bareiss(J.D);
}

/// det J' = det A' det D on the hyperplane a_0 = 0.
inline MultiPoly<Integer> restricted_jacobian_det(int d, int m, int k) {
    auto J = jacobian_blocks(d, m, k);
    return det_bareiss(restricted_A(J.A)) * det_bareiss(J.D);
}

/**
 * Nonsingularity certificate over Z[1/m]:
 * k = 0: det J contains m^(d+1) (b_0..b_d)^(2m-2);
 * k >= 1: det J' contains m^(d+1) (-1)^((m+1)d^2+dk) b_0^(m-1+k) (b_1..b_{d-1})^(2m-2) b_d^(2m-2-k).
 */
inline CheckReport jacobian_certificate_check(int d, int m, int k) {
    CheckReport rep{"det-J", "d=" + std::to_string(d) + ",m=" + std::to_string(m) + ",k=" + std::to_string(k),
                    "symbolic", 1, {}, {}};
    auto J = jacobian_blocks(d, m, k);
    auto det_d = det_bareiss(J.D);
    std::vector<std::uint32_t> e(static_cast<std::size_t>(d + 1), static_cast<std::uint32_t>(2 * m - 2));
    Integer want = pow(Integer(m), static_cast<unsigned long>(d + 1));
    MultiPoly<Integer> det(landen_vars(d));
    if (k == 0) {
        det = det_bareiss(J.A) * det_d;
        if (!(det == det_bareiss(J.full()))) rep.fail("det J differs from det A det D");
    } else {
        det = det_bareiss(restricted_A(J.A)) * det_d;
        e[0] = static_cast<std::uint32_t>(m - 1 + k);
        e[static_cast<std::size_t>(d)] = static_cast<std::uint32_t>(2 * m - 2 - k);
        want *= Integer(sign_power(static_cast<long>(m + 1) * d * d + static_cast<long>(d) * k));
        if (!det_bareiss(J.A).is_zero()) rep.note("det A != 0 for k >= 1");
    }
    auto c = det.coefficient(b_monomial(d, e));
    if (!(c == want)) rep.fail("coefficient " + c.to_string() + ", expected " + want.to_string());
    return rep;
}

/// One claim of the report-only probe.
struct ProbeLine {
    std::string claim;
    std::string outcome;  // "holds", "holds up to sign", "fails", "n/a"
};

struct ProbeReport {
    std::string grid;
    std::vector<ProbeLine> lines;
};

inline std::string compare_up_to_sign(const MultiPoly<Integer>& x, const MultiPoly<Integer>& y) {
    if (x == y) return "holds";
    if (x == -y) return "holds up to sign";
    return "fails";
}

inline std::vector<MultiPoly<Integer>> shift_right(const std::vector<MultiPoly<Integer>>& row) {
    std::vector<MultiPoly<Integer>> out{MultiPoly<Integer>(row[0].vars())};
    out.insert(out.end(), row.begin(), row.end() - 1);
    return out;
}

/**
 * Report-only probe of the experimental remark:
 * b_d^k det A'_{d,m,k} = (-1)^((d+1)k) b_0^k det A'_{d,m,0}, and the variant with sign (-1)^(dk);
 * det A_{d,m,0} = (-b_0)^(m-1) det A'_{d,m,0}, and the variant with sign (-1)^((m+1)d);
 * for 1 <= m <= d+1 the row shift from A_{d,m,k} to A_{d,m,k+1}.
 */
inline ProbeReport conjecture_probe(int d, int m, int k) {
    jacobian_guard(d, m, k);
    ProbeReport rep{"d=" + std::to_string(d) + ",m=" + std::to_string(m) + ",k=" + std::to_string(k), {}};
    auto J0 = jacobian_blocks(d, m, 0), Jk = jacobian_blocks(d, m, k);
    auto b = coefficient_variables(d, 'b');
    const auto uk = static_cast<unsigned>(k);
    auto lhs = b[static_cast<std::size_t>(d)].pow(uk) * det_bareiss(restricted_A(Jk.A));
    auto rhs = b[0].pow(uk) * det_bareiss(restricted_A(J0.A)) * Integer(sign_power(static_cast<long>(d + 1) * k));
    rep.lines.push_back({"b_d^k det A'_k = (-1)^((d+1)k) b_0^k det A'_0", compare_up_to_sign(lhs, rhs)});
    rep.lines.push_back({"b_d^k det A'_k = (-1)^(dk) b_0^k det A'_0",
                         compare_up_to_sign(lhs, rhs * Integer(sign_power(static_cast<long>(k))))});
    const auto det_a0 = det_bareiss(J0.A), det_a0r = det_bareiss(restricted_A(J0.A));
    const auto b0m = b[0].pow(static_cast<unsigned>(m - 1));
    rep.lines.push_back({"det A_0 = (-b_0)^(m-1) det A'_0",
                         compare_up_to_sign(det_a0, b0m * det_a0r * Integer(sign_power(m - 1)))});
    rep.lines.push_back({"det A_0 = (-1)^((m+1)d) b_0^(m-1) det A'_0",
                         compare_up_to_sign(det_a0, b0m * det_a0r * Integer(sign_power(static_cast<long>(m + 1) * d)))});
    if (m <= d + 1 && k + 1 < m) {
        auto J1 = jacobian_blocks(d, m, k + 1);
        bool top = true;
        for (int i = 0; i < d; ++i) top = top && J1.A[static_cast<std::size_t>(i)] == Jk.A[static_cast<std::size_t>(i + 1)];
        rep.lines.push_back({"top d rows of A_(k+1) = bottom d rows of A_k", top ? "holds" : "fails"});
        const auto src = static_cast<std::size_t>(d + 1 - m);
        bool last = J1.A[static_cast<std::size_t>(d)] == shift_right(Jk.A[src]);
        rep.lines.push_back({"last row of A_(k+1) = row d+1-m of A_k shifted right", last ? "holds" : "fails"});
    } else {
        rep.lines.push_back({"row shift A_k -> A_(k+1)", "n/a"});
    }
    return rep;
}

}  // namespace landen
