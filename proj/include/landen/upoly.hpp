#pragma once

/**
 * @file upoly.hpp
 * @brief Dense univariate polynomials over an exact field.
 *
 * Coefficients are stored in ascending order and kept trimmed, so the zero
 * polynomial is the empty vector and degree() is -1 for it.
 */

#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "integer.hpp"
#include "multipoly.hpp"
#include "prime_field.hpp"

namespace landen {

/// Characteristic of a coefficient field: 0 for Q, p for F_p.
inline std::uint64_t field_characteristic(const Rational&) { return 0; }
inline std::uint64_t field_characteristic(const PrimeField& x) { return x.modulus(); }

/// Field tag used in serialized rational functions.
inline std::string field_tag(const Rational&) { return "Q"; }
inline std::string field_tag(const PrimeField& x) { return "Fp:" + std::to_string(x.modulus()); }

template <exact_field F>
class UPoly {
public:
    explicit UPoly(F zero) : zero_(zero.zero_like()) {}
    UPoly(F zero, std::vector<F> ascending) : zero_(zero.zero_like()), c_(std::move(ascending)) { trim(); }

    /// From descending coefficients (leading first).
    static UPoly from_descending(F zero, const std::vector<F>& desc) {
        return UPoly(zero, std::vector<F>(desc.rbegin(), desc.rend()));
    }
    static UPoly monomial(F zero, std::size_t e, const F& c) {
        std::vector<F> v(e + 1, zero.zero_like());
        v[e] = c;
        return UPoly(zero, std::move(v));
    }

    const F& ring_zero() const noexcept { return zero_; }
    const std::vector<F>& coeffs() const noexcept { return c_; }
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    F coeff(std::size_t i) const { return i < c_.size() ? c_[i] : zero_; }
    const F& leading() const { return c_.back(); }

    /// Index of the lowest nonzero coefficient; -1 for zero.
    long valuation() const noexcept {
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (!c_[i].is_zero()) return static_cast<long>(i);
        }
        return -1;
    }

    /// Descending coefficient list padded to formal degree d.
    std::vector<F> descending(std::size_t d) const {
        if (degree() > static_cast<long>(d)) throw invalid_argument("descending: degree exceeds formal degree");
        std::vector<F> out(d + 1, zero_);
        for (std::size_t i = 0; i < c_.size(); ++i) out[d - i] = c_[i];
        return out;
    }

    F operator()(const F& x) const {
        F r = zero_;
        for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

    UPoly operator-() const {
        UPoly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        std::vector<F> v(std::max(a.c_.size(), b.c_.size()), a.zero_);
        for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
        return UPoly(a.zero_, std::move(v));
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return UPoly(a.zero_);
        std::vector<F> v(a.c_.size() + b.c_.size() - 1, a.zero_);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        }
        return UPoly(a.zero_, std::move(v));
    }
    friend UPoly operator*(const UPoly& a, const F& s) {
        UPoly r = a;
        for (auto& x : r.c_) x *= s;
        r.trim();
        return r;
    }
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

    /// Quotient and remainder; throws on division by zero.
    friend std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
        if (b.is_zero()) throw invalid_argument("polynomial division by zero");
        UPoly r = a;
        if (a.degree() < b.degree()) return {UPoly(a.zero_), r};
        std::vector<F> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), a.zero_);
        const F inv = b.leading().inverse();
        while (!r.is_zero() && r.degree() >= b.degree()) {
            const std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
            F c = r.leading() * inv;
            q[shift] = c;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[shift + j] -= c * b.c_[j];
            r.trim();
        }
        return {UPoly(a.zero_, std::move(q)), r};
    }

    UPoly monic() const {
        if (is_zero()) return *this;
        return *this * leading().inverse();
    }

    UPoly derivative() const {
        std::vector<F> v;
        for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(c_[i] * zero_.embed(Integer(static_cast<unsigned long>(i))));
        return UPoly(zero_, std::move(v));
    }

    std::string to_string() const {
        if (c_.empty()) return "0";
        std::string s;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i].is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += "(" + c_[i].to_string() + ")";
            if (i > 0) s += "*z" + (i > 1 ? "^" + std::to_string(i) : std::string());
        }
        return s;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    F zero_;
    std::vector<F> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
template <exact_field F>
UPoly<F> gcd(UPoly<F> a, UPoly<F> b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Exact quotient; throws not_divisible when a remainder is left.
template <exact_field F>
UPoly<F> exact_quotient(const UPoly<F>& a, const UPoly<F>& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw not_divisible("univariate division left a remainder", r.to_string());
    return q;
}

}  // namespace landen
