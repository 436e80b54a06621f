#pragma once

/**
 * @file resultant.hpp
 * @brief Sylvester resultants and discriminants at stated formal degrees.
 *
 * Polynomials are given as descending coefficient lists whose length fixes
 * the formal degree, so a vanishing leading coefficient is kept rather than
 * silently lowering the degree.
 */

#include <vector>

#include "errors.hpp"
#include "matrix.hpp"

namespace landen {

/// Formal degrees used to build a Sylvester matrix.
struct ResultantConvention {
    std::size_t deg_f = 0;
    std::size_t deg_g = 0;
};

/// Sylvester matrix of f (formal degree n) and g (formal degree p): p shifted
/// copies of f followed by n shifted copies of g.
template <class R>
Matrix<R> sylvester_matrix(const std::vector<R>& f, const std::vector<R>& g) {
    if (f.empty() || g.empty()) throw invalid_argument("sylvester_matrix: empty coefficient list");
    const std::size_t n = f.size() - 1, p = g.size() - 1, size = n + p;
    const R zero = zero_of(f[0]);
    Matrix<R> s(size, std::vector<R>(size, zero));
    for (std::size_t r = 0; r < p; ++r) {
        for (std::size_t j = 0; j <= n; ++j) s[r][r + j] = f[j];
    }
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t j = 0; j <= p; ++j) s[p + r][r + j] = g[j];
    }
    return s;
}

/// Res(f, g) at the formal degrees given by the list lengths; two constants give 1.
template <class R>
R sylvester_resultant(const std::vector<R>& f, const std::vector<R>& g) {
    const std::size_t n = f.size() - 1, p = g.size() - 1;
    if (n + p == 0) return one_of(f[0]);
    return det_bareiss(sylvester_matrix(f, g));
}

template <class R>
R sylvester_resultant(const std::vector<R>& f, const std::vector<R>& g, const ResultantConvention& conv) {
    if (f.size() != conv.deg_f + 1 || g.size() != conv.deg_g + 1) {
        throw invalid_argument("sylvester_resultant: coefficient lists disagree with the formal degrees");
    }
    return sylvester_resultant(f, g);
}

/**
 * Disc(f) = (-1)^(n(n-1)/2) Res(f, f') / f0 at formal degree n = len - 1.
 * Degree 1 gives 1. Throws not_divisible when f0 does not divide exactly.
 */
template <class R>
R discriminant(const std::vector<R>& f) {
    if (f.size() < 2) throw invalid_argument("discriminant: formal degree must be >= 1");
    const std::size_t n = f.size() - 1;
    if (n == 1) return one_of(f[0]);
    if (f[0].is_zero()) throw not_divisible("discriminant: leading coefficient vanishes at the formal degree");
    std::vector<R> df;
    for (std::size_t i = 0; i < n; ++i) df.push_back(scale_by_integer(f[i], Integer(static_cast<unsigned long>(n - i))));
    R r = divide_exact(sylvester_resultant(f, df), f[0]);
    return ((n * (n - 1) / 2) % 2 == 1) ? -r : r;
}

}  // namespace landen
