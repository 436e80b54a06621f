#pragma once

/**
 * @file integer.hpp
 * @brief Arbitrary precision integers and rationals.
 *
 * Thin value types over GMP's C++ classes. The wrappers exist so that the
 * rest of the library sees a small, explicit surface (no expression
 * templates leaking into `auto`) and so that every exact ring shares the
 * same protocol: is_zero(), zero_like(), one_like(), embed().
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>

#include "errors.hpp"

namespace landen {

class Integer {
public:
    Integer() = default;
    Integer(int v) : v_(v) {}                  // NOLINT(google-explicit-constructor)
    Integer(long v) : v_(v) {}                 // NOLINT(google-explicit-constructor)
    Integer(long long v) : v_(static_cast<long>(v)) {}  // NOLINT
    Integer(unsigned v) : v_(v) {}             // NOLINT
    Integer(unsigned long v) : v_(v) {}        // NOLINT
    explicit Integer(mpz_class v) : v_(std::move(v)) {}

    /// Parses an optionally signed decimal string.
    static Integer from_string(const std::string& s) {
        mpz_class v;
        std::string body = s;
        if (!body.empty() && body[0] == '+') body.erase(0, 1);
        if (body.empty() || v.set_str(body, 10) != 0) {
            throw parse_error("not an integer: '" + s + "'");
        }
        return Integer(std::move(v));
    }

    const mpz_class& raw() const noexcept { return v_; }

    bool is_zero() const noexcept { return sgn(v_) == 0; }
    bool is_one() const noexcept { return v_ == 1; }
    int sign() const noexcept { return sgn(v_); }
    Integer zero_like() const { return Integer(); }
    Integer one_like() const { return Integer(1); }
    Integer embed(const Integer& n) const { return n; }

    bool fits_long() const noexcept { return v_.fits_slong_p(); }
    long to_long() const {
        if (!v_.fits_slong_p()) throw invalid_argument("integer out of range: " + to_string());
        return v_.get_si();
    }

    std::string to_string() const { return v_.get_str(10); }

    Integer operator-() const { return Integer(mpz_class(-v_)); }
    Integer& operator+=(const Integer& o) { v_ += o.v_; return *this; }
    Integer& operator-=(const Integer& o) { v_ -= o.v_; return *this; }
    Integer& operator*=(const Integer& o) { v_ *= o.v_; return *this; }

    friend Integer operator+(Integer a, const Integer& b) { a += b; return a; }
    friend Integer operator-(Integer a, const Integer& b) { a -= b; return a; }
    friend Integer operator*(Integer a, const Integer& b) { a *= b; return a; }

    friend bool operator==(const Integer& a, const Integer& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Integer& x) { return os << x.v_; }

private:
    mpz_class v_;
};

inline Integer abs(const Integer& x) { return Integer(mpz_class(::abs(x.raw()))); }

inline Integer gcd(const Integer& a, const Integer& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
    return Integer(std::move(g));
}

inline Integer pow(const Integer& base, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.raw().get_mpz_t(), e);
    return Integer(std::move(r));
}

/// Floor division and remainder with the divisor's sign convention of GMP fdiv.
inline Integer floor_div(const Integer& a, const Integer& b) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
    return Integer(std::move(q));
}

inline Integer floor_mod(const Integer& a, const Integer& b) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
    return Integer(std::move(r));
}

/// Exact quotient a/b when b divides a, otherwise nullopt.
inline std::optional<Integer> try_divide(const Integer& a, const Integer& b) {
    if (b.is_zero()) return std::nullopt;
    if (mpz_divisible_p(a.raw().get_mpz_t(), b.raw().get_mpz_t()) == 0) return std::nullopt;
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
    return Integer(std::move(q));
}

class Rational {
public:
    Rational() = default;
    Rational(int v) : v_(v) {}            // NOLINT(google-explicit-constructor)
    Rational(long v) : v_(v) {}           // NOLINT(google-explicit-constructor)
    Rational(const Integer& v) : v_(v.raw()) {}  // NOLINT(google-explicit-constructor)
    Rational(const Integer& num, const Integer& den) {
        if (den.is_zero()) throw invalid_argument("zero denominator");
        v_ = mpq_class(num.raw(), den.raw());
        v_.canonicalize();
    }
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    /// Accepts "n" or "n/d".
    static Rational from_string(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(Integer::from_string(s));
        return Rational(Integer::from_string(s.substr(0, slash)),
                        Integer::from_string(s.substr(slash + 1)));
    }

    const mpq_class& raw() const noexcept { return v_; }
    Integer num() const { return Integer(mpz_class(v_.get_num())); }
    Integer den() const { return Integer(mpz_class(v_.get_den())); }

    bool is_zero() const noexcept { return sgn(v_) == 0; }
    bool is_one() const noexcept { return v_ == 1; }
    int sign() const noexcept { return sgn(v_); }
    bool is_integer() const { return v_.get_den() == 1; }
    Rational zero_like() const { return Rational(); }
    Rational one_like() const { return Rational(1); }
    Rational embed(const Integer& n) const { return Rational(n); }

    Rational inverse() const {
        if (is_zero()) throw invalid_argument("division by zero in Q");
        return Rational(mpq_class(1 / v_));
    }

    std::string to_string() const { return v_.get_str(10); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw invalid_argument("division by zero in Q");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.v_; }

private:
    mpq_class v_;
};

inline std::optional<Rational> try_divide(const Rational& a, const Rational& b) {
    if (b.is_zero()) return std::nullopt;
    return a / b;
}

inline Rational pow(const Rational& base, unsigned long e) {
    Rational r(1);
    Rational b = base;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

}  // namespace landen

template <>
struct std::hash<landen::Integer> {
    std::size_t operator()(const landen::Integer& x) const noexcept {
        return std::hash<std::string>{}(x.to_string());
    }
};
