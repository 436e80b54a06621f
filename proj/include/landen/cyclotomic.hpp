#pragma once

/**
 * @file cyclotomic.hpp
 * @brief The ring Z[zeta_m] = Z[x]/(Phi_m(x)).
 *
 * Elements are stored in the power basis 1, x, ..., x^(phi(m)-1) and kept
 * reduced modulo the cyclotomic polynomial, so an element lies in Z exactly
 * when every coefficient but the constant one vanishes.
 */

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "integer.hpp"

namespace landen {

/// Dense univariate integer polynomial, ascending powers.
using IntCoeffs = std::vector<Integer>;

inline int euler_totient(int m) {
    int result = m;
    int n = m;
    for (int f = 2; f * f <= n; ++f) {
        if (n % f == 0) {
            while (n % f == 0) n /= f;
            result -= result / f;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace detail {

inline void trim(IntCoeffs& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

/// Exact quotient of integer polynomials by a monic divisor.
inline IntCoeffs divide_monic(IntCoeffs num, const IntCoeffs& den) {
    trim(num);
    const std::size_t dn = den.size() - 1;
    if (num.size() < den.size()) {
        if (!num.empty()) throw invariant_violation("cyclotomic division left a remainder");
        return {};
    }
    IntCoeffs q(num.size() - dn);
    for (std::size_t i = num.size(); i-- > dn;) {
        Integer c = num[i];
        q[i - dn] = c;
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
    }
    trim(num);
    if (!num.empty()) throw invariant_violation("cyclotomic division left a remainder");
    return q;
}

struct CycloData {
    int m = 1;
    int phi = 1;
    IntCoeffs poly;                          // Phi_m, ascending
    std::vector<std::vector<long>> reduce;   // x^i mod Phi_m for 0 <= i < 2*phi - 1
    std::vector<std::vector<long>> zeta;     // x^t mod Phi_m for 0 <= t < m
};

inline std::shared_ptr<const CycloData> build_cyclo_data(int m);

class CycloCache {
public:
    static CycloCache& instance() {
        static CycloCache cache;
        return cache;
    }

    std::shared_ptr<const CycloData> get(int m) {
        {
            std::shared_lock lock(mutex_);
            auto it = table_.find(m);
            if (it != table_.end()) return it->second;
        }
        auto data = build_cyclo_data(m);
        std::unique_lock lock(mutex_);
        return table_.emplace(m, std::move(data)).first->second;
    }

private:
    std::shared_mutex mutex_;
    std::map<int, std::shared_ptr<const CycloData>> table_;
};

}  // namespace detail

/**
 * Phi_m as ascending integer coefficients, built by dividing x^m - 1 by
 * Phi_d for every proper divisor d of m. Results are cached per conductor.
 */
inline IntCoeffs cyclotomic_polynomial(int m) {
    if (m < 1) throw invalid_argument("cyclotomic_polynomial: m must be >= 1");
    return detail::CycloCache::instance().get(m)->poly;
}

namespace detail {

inline IntCoeffs compute_cyclotomic(int m) {
    IntCoeffs num(static_cast<std::size_t>(m) + 1, Integer(0));
    num[0] = Integer(-1);
    num[static_cast<std::size_t>(m)] = Integer(1);
    for (int d = 1; d < m; ++d) {
        if (m % d == 0) num = divide_monic(num, cyclotomic_polynomial(d));
    }
    return num;
}

inline std::shared_ptr<const CycloData> build_cyclo_data(int m) {
    auto data = std::make_shared<CycloData>();
    data->m = m;
    data->poly = compute_cyclotomic(m);
    data->phi = static_cast<int>(data->poly.size()) - 1;
    const int phi = data->phi;

    // Successive multiplication by x, folding x^phi back via the monic relation.
    std::vector<long> cur(static_cast<std::size_t>(phi), 0);
    cur[0] = 1;
    const int span = std::max(2 * phi - 1, m);
    std::vector<std::vector<long>> powers;
    powers.reserve(static_cast<std::size_t>(span));
    for (int i = 0; i < span; ++i) {
        powers.push_back(cur);
        std::vector<long> next(static_cast<std::size_t>(phi), 0);
        long carry = cur[static_cast<std::size_t>(phi - 1)];
        for (int j = phi - 1; j > 0; --j) next[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)];
        for (int j = 0; j < phi; ++j) {
            next[static_cast<std::size_t>(j)] -= carry * data->poly[static_cast<std::size_t>(j)].to_long();
        }
        cur = std::move(next);
    }
    data->reduce.assign(powers.begin(), powers.begin() + (2 * phi - 1));
    data->zeta.assign(powers.begin(), powers.begin() + m);
    return data;
}

}  // namespace detail

/**
 * Element of Z[zeta_m] reduced modulo Phi_m.
 *
 * Integers embed as constant coefficient vectors. Operations between
 * elements of different conductors throw ring_mismatch.
 */
class CyclotomicInt {
public:
    CyclotomicInt() : CyclotomicInt(1) {}

    explicit CyclotomicInt(int m, const Integer& n = Integer(0))
        : data_(data_for(m)), c_(static_cast<std::size_t>(data_->phi), Integer(0)) {
        c_[0] = n;
    }

    /// From power-basis coefficients; longer inputs are reduced modulo Phi_m.
    static CyclotomicInt from_coeffs(int m, const IntCoeffs& coeffs) {
        CyclotomicInt r(m);
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (coeffs[i].is_zero()) continue;
            r += r.power_of_x(static_cast<long>(i)) * CyclotomicInt(m, coeffs[i]);
        }
        return r;
    }

    /// zeta_m^t for any integer t.
    static CyclotomicInt zeta_pow(int m, long t) {
        CyclotomicInt r(m);
        const auto& z = r.data_->zeta[static_cast<std::size_t>(((t % m) + m) % m)];
        for (std::size_t i = 0; i < z.size(); ++i) r.c_[i] = Integer(z[i]);
        return r;
    }

    int conductor() const noexcept { return data_->m; }
    const IntCoeffs& coeffs() const noexcept { return c_; }

    bool is_zero() const noexcept {
        for (const auto& x : c_) {
            if (!x.is_zero()) return false;
        }
        return true;
    }
    bool is_integer() const noexcept {
        for (std::size_t i = 1; i < c_.size(); ++i) {
            if (!c_[i].is_zero()) return false;
        }
        return true;
    }
    CyclotomicInt zero_like() const { return CyclotomicInt(data_->m); }
    CyclotomicInt one_like() const { return CyclotomicInt(data_->m, Integer(1)); }
    CyclotomicInt embed(const Integer& n) const { return CyclotomicInt(data_->m, n); }

    std::string to_string() const {
        std::ostringstream os;
        os << '[';
        for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
        os << ']';
        return os.str();
    }

    CyclotomicInt operator-() const {
        CyclotomicInt r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    CyclotomicInt& operator+=(const CyclotomicInt& o) {
        same(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    CyclotomicInt& operator-=(const CyclotomicInt& o) {
        same(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    CyclotomicInt& operator*=(const CyclotomicInt& o) {
        *this = *this * o;
        return *this;
    }

    friend CyclotomicInt operator+(CyclotomicInt a, const CyclotomicInt& b) { a += b; return a; }
    friend CyclotomicInt operator-(CyclotomicInt a, const CyclotomicInt& b) { a -= b; return a; }
    friend CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b) {
        a.same(b);
        const std::size_t phi = a.c_.size();
        if (phi == 1) {
            CyclotomicInt r = a;
            r.c_[0] *= b.c_[0];
            return r;
        }
        IntCoeffs prod(2 * phi - 1, Integer(0));
        for (std::size_t i = 0; i < phi; ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < phi; ++j) {
                if (!b.c_[j].is_zero()) prod[i + j] += a.c_[i] * b.c_[j];
            }
        }
        CyclotomicInt r(a.data_->m);
        for (std::size_t i = 0; i < prod.size(); ++i) {
            if (prod[i].is_zero()) continue;
            const auto& red = a.data_->reduce[i];
            for (std::size_t j = 0; j < phi; ++j) {
                if (red[j] != 0) r.c_[j] += prod[i] * Integer(red[j]);
            }
        }
        return r;
    }

    friend CyclotomicInt operator*(CyclotomicInt a, const Integer& n) {
        for (auto& x : a.c_) x *= n;
        return a;
    }

    friend bool operator==(const CyclotomicInt& a, const CyclotomicInt& b) {
        return a.data_->m == b.data_->m && a.c_ == b.c_;
    }

    friend std::ostream& operator<<(std::ostream& os, const CyclotomicInt& x) {
        return os << x.to_string();
    }

private:
    static std::shared_ptr<const detail::CycloData> data_for(int m) {
        if (m < 1) throw invalid_argument("cyclotomic conductor must be >= 1");
        return detail::CycloCache::instance().get(m);
    }

    CyclotomicInt power_of_x(long i) const { return zeta_pow(data_->m, i); }

    void same(const CyclotomicInt& o) const {
        if (o.data_->m != data_->m) {
            throw ring_mismatch("Z[zeta_" + std::to_string(data_->m) + "] vs Z[zeta_" +
                                std::to_string(o.data_->m) + "]");
        }
    }

    std::shared_ptr<const detail::CycloData> data_;
    IntCoeffs c_;
};

/// Exact division of every coordinate by a rational integer.
inline std::optional<CyclotomicInt> try_divide(const CyclotomicInt& a, const Integer& n) {
    IntCoeffs q;
    q.reserve(a.coeffs().size());
    for (const auto& c : a.coeffs()) {
        auto r = try_divide(c, n);
        if (!r) return std::nullopt;
        q.push_back(std::move(*r));
    }
    return CyclotomicInt::from_coeffs(a.conductor(), q);
}

/// The automorphism zeta_m -> zeta_m^j; requires gcd(j, m) = 1.
inline CyclotomicInt galois_apply(const CyclotomicInt& x, long j) {
    const int m = x.conductor();
    if (std::gcd(((j % m) + m) % m, static_cast<long>(m)) != 1 && m != 1) {
        throw invalid_argument("galois_apply: gcd(" + std::to_string(j) + ", " +
                               std::to_string(m) + ") != 1");
    }
    CyclotomicInt r(m);
    for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
        if (x.coeffs()[i].is_zero()) continue;
        r += CyclotomicInt::zeta_pow(m, j * static_cast<long>(i)) * x.coeffs()[i];
    }
    return r;
}

/// Returns n when x is the image of the integer n; throws not_rational otherwise.
inline Integer descend_to_integer(const CyclotomicInt& x) {
    if (!x.is_integer()) {
        throw not_rational("cyclotomic integer " + x.to_string() + " is not in Z");
    }
    return x.coeffs()[0];
}

}  // namespace landen
