#pragma once

/**
 * @file matrix.hpp
 * @brief Square-matrix determinants over exact rings.
 *
 * det_bareiss is fraction-free: every intermediate division is exact, so it
 * works over Z and over polynomial rings such as Z[a,b]. det_laplace is a
 * cofactor expansion kept as an independent cross-check for small sizes.
 */

#include <utility>
#include <vector>

#include "errors.hpp"
#include "integer.hpp"
#include "multipoly.hpp"

namespace landen {

template <class R>
using Matrix = std::vector<std::vector<R>>;

inline Integer divide_exact(const Integer& a, const Integer& b) {
    auto q = try_divide(a, b);
    if (!q) throw not_divisible("divide_exact: " + b.to_string() + " does not divide " + a.to_string());
    return *q;
}

template <exact_field F>
F divide_exact(const F& a, const F& b) {
    return a / b;
}

template <exact_division_ring R>
MultiPoly<R> divide_exact(const MultiPoly<R>& a, const MultiPoly<R>& b) {
    return exact_divide(a, b);
}

template <exact_ring R>
R one_of(const R& x) { return x.one_like(); }
template <exact_ring R>
MultiPoly<R> one_of(const MultiPoly<R>& x) { return MultiPoly<R>::constant(x.vars(), x.ring_zero().one_like()); }

template <exact_ring R>
R zero_of(const R& x) { return x.zero_like(); }
template <exact_ring R>
MultiPoly<R> zero_of(const MultiPoly<R>& x) { return MultiPoly<R>(x.vars(), x.ring_zero()); }

template <exact_ring R>
R scale_by_integer(const R& x, const Integer& n) { return x * x.embed(n); }
template <exact_ring R>
MultiPoly<R> scale_by_integer(const MultiPoly<R>& p, const Integer& n) { return p * p.ring_zero().embed(n); }

template <class R>
void check_square(const Matrix<R>& m) {
    for (const auto& row : m) {
        if (row.size() != m.size()) throw invalid_argument("determinant of a non-square matrix");
    }
}

/// Bareiss fraction-free elimination with row pivoting.
template <class R>
R det_bareiss(Matrix<R> a) {
    check_square(a);
    const std::size_t n = a.size();
    if (n == 0) throw invalid_argument("determinant of an empty matrix needs a ring prototype");
    R prev = one_of(a[0][0]);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t p = k + 1;
            while (p < n && a[p][k].is_zero()) ++p;
            if (p == n) return zero_of(a[0][0]);
            std::swap(a[k], a[p]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = divide_exact(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
            }
        }
        prev = a[k][k];
    }
    R d = a[n - 1][n - 1];
    return negate ? -d : d;
}

/// Cofactor expansion along the first row; exponential, for small checks.
template <class R>
R det_laplace(const Matrix<R>& a) {
    check_square(a);
    const std::size_t n = a.size();
    if (n == 0) throw invalid_argument("determinant of an empty matrix needs a ring prototype");
    if (n == 1) return a[0][0];
    R sum = zero_of(a[0][0]);
    for (std::size_t j = 0; j < n; ++j) {
        if (a[0][j].is_zero()) continue;
        Matrix<R> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<R> row;
            for (std::size_t c = 0; c < n; ++c) {
                if (c != j) row.push_back(a[i][c]);
            }
            minor.push_back(std::move(row));
        }
        R t = a[0][j] * det_laplace(minor);
        sum = (j % 2 == 0) ? sum + t : sum - t;
    }
    return sum;
}

/// Drops row r and column c.
template <class R>
Matrix<R> submatrix(const Matrix<R>& a, std::size_t r, std::size_t c) {
    Matrix<R> out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i == r) continue;
        std::vector<R> row;
        for (std::size_t j = 0; j < a[i].size(); ++j) {
            if (j != c) row.push_back(a[i][j]);
        }
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace landen
