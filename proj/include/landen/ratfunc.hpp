#pragma once

/**
 * @file ratfunc.hpp
 * @brief Rational functions of formal degree d, projective points, and
 * truncated Laurent expansions at 0.
 *
 * Coefficient lists are descending: num[0] multiplies z^d, num[d] is the
 * constant term, as in phi(z) = (a0 z^d + ... + ad) / (b0 z^d + ... + bd).
 */

#include <algorithm>
#include <string>
#include <vector>

#include "errors.hpp"
#include "integer.hpp"
#include "prime_field.hpp"
#include "upoly.hpp"

namespace landen {

template <exact_field F>
class RatFunc {
public:
    RatFunc(std::vector<F> num, std::vector<F> den) : num_(std::move(num)), den_(std::move(den)) {
        if (num_.empty() || num_.size() != den_.size()) {
            throw invalid_argument("RatFunc: numerator and denominator need d+1 coefficients each");
        }
        if (std::all_of(den_.begin(), den_.end(), [](const F& x) { return x.is_zero(); })) {
            throw invalid_argument("RatFunc: denominator is identically zero");
        }
        for (const auto& x : num_) same_field(x);
        for (const auto& x : den_) same_field(x);
    }

    int d() const noexcept { return static_cast<int>(num_.size()) - 1; }
    const std::vector<F>& num() const noexcept { return num_; }
    const std::vector<F>& den() const noexcept { return den_; }
    const F& field_zero() const noexcept { return zero_; }
    std::string field() const { return field_tag(den_[0]); }

    UPoly<F> numerator() const { return UPoly<F>::from_descending(zero(), num_); }
    UPoly<F> denominator() const { return UPoly<F>::from_descending(zero(), den_); }

    bool is_zero_function() const {
        return std::all_of(num_.begin(), num_.end(), [](const F& x) { return x.is_zero(); });
    }

    /// Common factor removed, denominator monic, formal degree = true degree.
    RatFunc reduced() const {
        auto n = numerator(), dn = denominator();
        if (n.is_zero()) return from_polys(n, UPoly<F>(zero(), {zero().one_like()}), 0);
        auto g = gcd(n, dn);
        n = exact_quotient(n, g);
        dn = exact_quotient(dn, g);
        const F inv = dn.leading().inverse();
        n = n * inv;
        dn = dn * inv;
        return from_polys(n, dn, static_cast<std::size_t>(std::max(n.degree(), dn.degree())));
    }

    /// Builds a RatFunc of formal degree d from ascending polynomials.
    static RatFunc from_polys(const UPoly<F>& n, const UPoly<F>& dn, std::size_t d) {
        return RatFunc(n.descending(d), dn.descending(d));
    }

    /// Equality as functions: n1 d2 = n2 d1.
    friend bool same_function(const RatFunc& x, const RatFunc& y) {
        return x.numerator() * y.denominator() == y.numerator() * x.denominator();
    }

    friend bool operator==(const RatFunc&, const RatFunc&) = default;

private:
    F zero() const { return den_[0].zero_like(); }
    void same_field(const F& x) {
        if (!(x.zero_like() == zero_)) throw ring_mismatch("RatFunc: mixed coefficient fields");
    }

    std::vector<F> num_;
    std::vector<F> den_;
    F zero_ = den_[0].zero_like();
};

/// max(deg num, deg den) after removing the gcd; 0 for the zero function.
template <exact_field F>
long true_degree(const RatFunc<F>& phi) {
    if (phi.is_zero_function()) return 0;
    return phi.reduced().d();
}

/**
 * Coefficients of z^start .. z^(start+N-1); all coefficients below start are
 * zero and nothing at or beyond end() is known.
 */
template <exact_field F>
struct LaurentPrefix {
    long start = 0;
    std::vector<F> coeffs;
    F zero;

    long end() const noexcept { return start + static_cast<long>(coeffs.size()); }
    std::size_t order() const noexcept { return coeffs.size(); }

    F at(long n) const {
        if (n >= end()) throw invalid_argument("LaurentPrefix: coefficient beyond truncation order");
        if (n < start) return zero;
        return coeffs[static_cast<std::size_t>(n - start)];
    }

    /// True when every known coefficient below `limit` matches.
    friend bool agree_below(const LaurentPrefix& x, const LaurentPrefix& y, long limit) {
        if (limit > x.end() || limit > y.end()) throw invalid_argument("agree_below: limit beyond truncation order");
        for (long n = std::min(x.start, y.start); n < limit; ++n) {
            if (!(x.at(n) == y.at(n))) return false;
        }
        return true;
    }

    friend LaurentPrefix operator+(const LaurentPrefix& x, const LaurentPrefix& y) {
        LaurentPrefix r{std::min(x.start, y.start), {}, x.zero};
        for (long n = r.start; n < std::min(x.end(), y.end()); ++n) r.coeffs.push_back(x.at(n) + y.at(n));
        return r;
    }

    friend LaurentPrefix operator*(const LaurentPrefix& x, const LaurentPrefix& y) {
        LaurentPrefix r{x.start + y.start, {}, x.zero};
        const std::size_t n = std::min(x.order(), y.order());
        r.coeffs.assign(n, x.zero);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; i + j < n; ++j) r.coeffs[i + j] += x.coeffs[i] * y.coeffs[j];
        }
        return r;
    }
};

/**
 * First N Laurent coefficients of phi at 0, starting at its valuation. A
 * pole of order e at 0 is handled by expanding z^e phi and shifting by -e.
 */
template <exact_field F>
LaurentPrefix<F> laurent_expand(const RatFunc<F>& phi, std::size_t N) {
    const F zero = phi.field_zero();
    auto num = phi.numerator();
    auto den = phi.denominator();
    if (num.is_zero()) return {0, std::vector<F>(N, zero), zero};
    const long vn = num.valuation(), vd = den.valuation();
    // num = z^vn n', den = z^vd d' with n'(0), d'(0) nonzero.
    std::vector<F> n(num.coeffs().begin() + vn, num.coeffs().end());
    std::vector<F> d(den.coeffs().begin() + vd, den.coeffs().end());
    const F inv = d[0].inverse();
    std::vector<F> c(N, zero);
    for (std::size_t i = 0; i < N; ++i) {
        F s = i < n.size() ? n[i] : zero;
        for (std::size_t j = 1; j <= i && j < d.size(); ++j) s -= d[j] * c[i - j];
        c[i] = s * inv;
    }
    return {vn - vd, std::move(c), zero};
}

/// Point of projective space given by homogeneous coordinates.
template <class R>
struct ProjPoint {
    std::vector<R> c;
    std::size_t dim() const noexcept { return c.empty() ? 0 : c.size() - 1; }
    friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
};

/// Content 1 and first nonzero coordinate positive.
inline ProjPoint<Integer> normalize_proj(const std::vector<Integer>& c) {
    Integer g(0);
    for (const auto& x : c) g = gcd(g, x);
    if (g.is_zero()) throw invalid_argument("normalize_proj: all coordinates are zero");
    auto lead = std::find_if(c.begin(), c.end(), [](const Integer& x) { return !x.is_zero(); });
    if (lead->sign() < 0) g = -g;
    ProjPoint<Integer> p;
    for (const auto& x : c) p.c.push_back(*try_divide(x, g));
    return p;
}

/// Clears denominators, then normalizes over Z.
inline ProjPoint<Integer> normalize_proj(const std::vector<Rational>& c) {
    Integer l(1);
    for (const auto& x : c) {
        const Integer dn = x.den();
        l = *try_divide(l * dn, gcd(l, dn));
    }
    std::vector<Integer> ints;
    for (const auto& x : c) ints.push_back((x * Rational(l)).num());
    return normalize_proj(ints);
}

/// Scales so that the first nonzero coordinate is 1.
inline ProjPoint<PrimeField> normalize_proj(const std::vector<PrimeField>& c) {
    auto lead = std::find_if(c.begin(), c.end(), [](const PrimeField& x) { return !x.is_zero(); });
    if (lead == c.end()) throw invalid_argument("normalize_proj: all coordinates are zero");
    const PrimeField inv = lead->inverse();
    ProjPoint<PrimeField> p;
    for (const auto& x : c) p.c.push_back(x * inv);
    return p;
}

}  // namespace landen
