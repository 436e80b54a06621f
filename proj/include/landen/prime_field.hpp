#pragma once

/**
 * @file prime_field.hpp
 * @brief Elements of F_p for word-sized primes.
 *
 * Every element carries its modulus, so mixing elements of different prime
 * fields is detected at the operation instead of silently producing garbage.
 */

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "errors.hpp"
#include "integer.hpp"

namespace landen {

/// Trial division; moduli used here are tiny.
constexpr bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (std::uint64_t f = 3; f * f <= n; f += 2) {
        if (n % f == 0) return false;
    }
    return true;
}

class PrimeField {
public:
    /// Residue of n modulo p. Throws not_prime unless p is prime.
    PrimeField(const Integer& n, std::uint64_t p) : p_(checked(p)) {
        Integer r = floor_mod(n, Integer(static_cast<unsigned long>(p)));
        v_ = static_cast<std::uint64_t>(r.to_long());
    }

    static PrimeField zero(std::uint64_t p) { return PrimeField(Integer(0), p); }
    static PrimeField one(std::uint64_t p) { return PrimeField(Integer(1), p); }

    /// Reduces a rational number; throws invalid_argument if p divides the denominator.
    static PrimeField from_rational(const Rational& q, std::uint64_t p) {
        PrimeField den(q.den(), p);
        if (den.is_zero()) {
            throw invalid_argument("denominator " + q.den().to_string() +
                                   " vanishes mod " + std::to_string(p));
        }
        return PrimeField(q.num(), p) / den;
    }

    std::uint64_t value() const noexcept { return v_; }
    std::uint64_t modulus() const noexcept { return p_; }

    bool is_zero() const noexcept { return v_ == 0; }
    bool is_one() const noexcept { return v_ == 1; }
    PrimeField zero_like() const { return raw(0, p_); }
    PrimeField one_like() const { return raw(1, p_); }
    PrimeField embed(const Integer& n) const { return PrimeField(n, p_); }

    PrimeField inverse() const {
        if (v_ == 0) throw invalid_argument("inverse of zero in F_" + std::to_string(p_));
        return pow(p_ - 2);
    }

    PrimeField pow(std::uint64_t e) const {
        PrimeField r = one_like();
        PrimeField b = *this;
        while (e) {
            if (e & 1) r *= b;
            e >>= 1;
            if (e) b *= b;
        }
        return r;
    }

    std::string to_string() const { return std::to_string(v_); }

    PrimeField operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }
    PrimeField& operator+=(const PrimeField& o) {
        same(o);
        v_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(v_) + o.v_) % p_);
        return *this;
    }
    PrimeField& operator-=(const PrimeField& o) { return *this += -o; }
    PrimeField& operator*=(const PrimeField& o) {
        same(o);
        v_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(v_) * o.v_) % p_);
        return *this;
    }
    PrimeField& operator/=(const PrimeField& o) {
        same(o);
        return *this *= o.inverse();
    }

    friend PrimeField operator+(PrimeField a, const PrimeField& b) { a += b; return a; }
    friend PrimeField operator-(PrimeField a, const PrimeField& b) { a -= b; return a; }
    friend PrimeField operator*(PrimeField a, const PrimeField& b) { a *= b; return a; }
    friend PrimeField operator/(PrimeField a, const PrimeField& b) { a /= b; return a; }

    friend bool operator==(const PrimeField& a, const PrimeField& b) {
        return a.p_ == b.p_ && a.v_ == b.v_;
    }

    friend std::ostream& operator<<(std::ostream& os, const PrimeField& x) { return os << x.v_; }

private:
    PrimeField() = default;

    static PrimeField raw(std::uint64_t v, std::uint64_t p) {
        PrimeField x;
        x.v_ = v;
        x.p_ = p;
        return x;
    }

    static std::uint64_t checked(std::uint64_t p) {
        if (!is_prime(p)) throw not_prime(std::to_string(p) + " is not prime");
        return p;
    }

    void same(const PrimeField& o) const {
        if (o.p_ != p_) {
            throw ring_mismatch("F_" + std::to_string(p_) + " vs F_" + std::to_string(o.p_));
        }
    }

    std::uint64_t v_ = 0;
    std::uint64_t p_ = 2;
};

inline std::optional<PrimeField> try_divide(const PrimeField& a, const PrimeField& b) {
    if (b.is_zero()) return std::nullopt;
    return a / b;
}

}  // namespace landen
