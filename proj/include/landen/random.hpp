#pragma once

/**
 * @file random.hpp
 * @brief Seeded sampling used by the verification suites.
 *
 * Each trial draws from its own engine derived from (seed, trial index), so
 * results do not depend on how trials are scheduled across threads.
 */

#include <cstdint>
#include <random>
#include <vector>

#include "integer.hpp"

namespace landen {

using Rng = std::mt19937_64;

inline Rng trial_rng(std::uint64_t seed, std::uint64_t trial, std::uint64_t stream = 0) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32),
                      static_cast<std::uint32_t>(stream)};
    return Rng(seq);
}

inline Integer random_integer(Rng& rng, long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    return Integer(dist(rng));
}

inline Integer random_nonzero_integer(Rng& rng, long bound) {
    std::uniform_int_distribution<long> dist(1, bound);
    std::bernoulli_distribution neg(0.5);
    long v = dist(rng);
    return Integer(neg(rng) ? -v : v);
}

/// Small-height rational: numerator in [-bound, bound], denominator in [1, max_den].
inline Rational random_rational(Rng& rng, long bound, long max_den = 4) {
    std::uniform_int_distribution<long> num(-bound, bound);
    std::uniform_int_distribution<long> den(1, max_den);
    return Rational(Integer(num(rng)), Integer(den(rng)));
}

inline Rational random_nonzero_rational(Rng& rng, long bound, long max_den = 4) {
    std::uniform_int_distribution<long> den(1, max_den);
    return Rational(random_nonzero_integer(rng, bound), Integer(den(rng)));
}

inline std::vector<Rational> random_rationals(Rng& rng, std::size_t n, long bound, long max_den = 4) {
    std::vector<Rational> v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) v.push_back(random_rational(rng, bound, max_den));
    return v;
}

}  // namespace landen
