#pragma once

/**
 * @file symfun.hpp
 * @brief The denominator map h_m on P^d and its conjugacy to the m-th power map.
 *
 * h_m(b) = [H_0(b), ..., H_d(b)] with H the universal denominator of
 * generic_gh. Conjugacy is checked from roots to coefficients only, so no
 * root finding is needed.
 */

#include <string>
#include <vector>

#include "elimination.hpp"
#include "matrix.hpp"

namespace landen {

/// (-e_1(x), e_2(x), ..., (-1)^d e_d(x)): the lower coefficients of prod (z - x_i).
template <class R>
std::vector<R> sigma_bar(const std::vector<R>& x) {
    if (x.empty()) return {};
    std::vector<R> c{one_of(x[0])};  // descending coefficients of the running product
    for (const auto& xi : x) {
        std::vector<R> next(c.size() + 1, zero_of(x[0]));
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i] = next[i] + c[i];
            next[i + 1] = next[i + 1] - xi * c[i];
        }
        c = std::move(next);
    }
    return std::vector<R>(c.begin() + 1, c.end());
}

/// Raw coordinates H_0(b), ..., H_d(b) over any ring receiving Z.
template <exact_ring R>
std::vector<R> h_m_coordinates(const std::vector<R>& b, int m) {
    if (b.empty()) throw invalid_argument("h_m: need at least one coordinate");
    const int d = static_cast<int>(b.size()) - 1;
    const auto& P = generic_gh(d, m, 0);
    auto c = evaluate_coordinates(P, std::vector<R>(b.size(), b[0].zero_like()), b);
    return std::vector<R>(c.begin() + d + 1, c.end());
}

inline bool all_zero(const std::vector<Rational>& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

/// h_m on P^d, normalized to a primitive integer point.
inline ProjPoint<Integer> h_m_projective(const std::vector<Rational>& b, int m) {
    if (all_zero(b)) throw invalid_argument("h_m_projective: all coordinates are zero");
    return normalize_proj(h_m_coordinates(b, m));
}

/// h_m on the chart b_0 = 1: (b_1..b_d) -> (H_1/H_0, ..., H_d/H_0).
inline std::vector<Rational> h_m_affine(const std::vector<Rational>& tail, int m) {
    std::vector<Rational> b{Rational(1)};
    b.insert(b.end(), tail.begin(), tail.end());
    auto h = h_m_coordinates(b, m);
    std::vector<Rational> out;
    for (std::size_t i = 1; i < h.size(); ++i) out.push_back(h[i] / h[0]);
    return out;
}

inline std::vector<Rational> power_map(const std::vector<Rational>& u, int m) {
    std::vector<Rational> out;
    for (const auto& x : u) out.push_back(pow(x, static_cast<unsigned long>(m)));
    return out;
}

/// h_m(sigma_bar(u)) = sigma_bar(u^m).
inline bool conjugacy_check(const std::vector<Rational>& u, int m) {
    return h_m_affine(sigma_bar(u), m) == sigma_bar(power_map(u, m));
}

inline std::vector<Rational> random_tuple(Rng& rng, std::size_t n, long bound = 9) { return random_rationals(rng, n, bound, 1); }

inline std::string seed_witness(std::uint64_t seed, std::size_t t, const std::vector<Rational>& v) {
    std::string s = "seed=" + std::to_string(seed) + " trial=" + std::to_string(t) + " point=[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].to_string();
    return s + "]";
}

/// Conjugacy on random integer root tuples.
inline CheckReport conjugacy_suite(int d, int m, std::size_t trials, std::uint64_t seed) {
    CheckReport rep{"hm-conjugacy", "d=" + std::to_string(d) + ",m=" + std::to_string(m), "sampled", trials, {}, {}};
    auto results = parallel_map(trials, [&](std::size_t t) -> std::string {
        Rng rng = trial_rng(seed, t);
        auto u = random_tuple(rng, static_cast<std::size_t>(d));
        return conjugacy_check(u, m) ? std::string() : seed_witness(seed, t, u);
    });
    for (auto& r : results) {
        if (!r.empty()) rep.fail(r);
    }
    return rep;
}

/**
 * On the stratum b_0 = ... = b_{n-1} = 0, b_n != 0, h_m keeps the first n
 * coordinates zero and acts on (b_n..b_d) as the (d-n)-dimensional h_m.
 */
inline CheckReport strata_restriction_check(int d, int m, std::size_t trials, std::uint64_t seed) {
    CheckReport rep{"hm-strata", "d=" + std::to_string(d) + ",m=" + std::to_string(m), "sampled", 0, {}, {}};
    for (int n = 0; n <= d; ++n) {
        auto results = parallel_map(trials, [&](std::size_t t) -> std::string {
            Rng rng = trial_rng(seed, t, static_cast<std::uint64_t>(n));
            auto u = random_tuple(rng, static_cast<std::size_t>(d - n));
            Rational lead = random_nonzero_rational(rng, 9, 1);
            std::vector<Rational> b(static_cast<std::size_t>(n), Rational(0));
            b.push_back(lead);
            for (const auto& x : sigma_bar(u)) b.push_back(lead * x);
            auto h = h_m_coordinates(b, m);
            for (int i = 0; i < n; ++i) {
                if (!h[static_cast<std::size_t>(i)].is_zero()) return seed_witness(seed, t, b) + ": left the stratum";
            }
            const Rational& hn = h[static_cast<std::size_t>(n)];
            if (hn.is_zero()) return seed_witness(seed, t, b) + ": leading coordinate vanished";
            std::vector<Rational> tail;
            for (std::size_t i = static_cast<std::size_t>(n) + 1; i < h.size(); ++i) tail.push_back(h[i] / hn);
            if (tail != sigma_bar(power_map(u, m))) return seed_witness(seed, t, b) + ": conjugacy fails on the stratum";
            return {};
        });
        rep.trials += trials;
        for (auto& r : results) {
            if (!r.empty()) rep.fail("n=" + std::to_string(n) + " " + r);
        }
    }
    return rep;
}

/// h_m(b) = 0 iff b = 0: symbolically at b = 0, and nonvanishing at random b != 0.
inline CheckReport zero_locus_check(int d, int m, std::size_t trials, std::uint64_t seed) {
    CheckReport rep{"hm-zero-locus", "d=" + std::to_string(d) + ",m=" + std::to_string(m), "symbolic+sampled", trials, {}, {}};
    const auto& H = generic_gh(d, m, 0).H;
    std::vector<std::optional<MultiPoly<Integer>>> zero_b(H.vars().size());
    for (int i = 0; i <= d; ++i) zero_b[b_index(d, i)] = MultiPoly<Integer>(H.vars());
    if (!substitute_all(H, zero_b).is_zero()) rep.fail("H does not vanish at b = 0");
    auto results = parallel_map(trials, [&](std::size_t t) -> std::string {
        Rng rng = trial_rng(seed, t);
        std::vector<Rational> b;
        do {
            b = random_tuple(rng, static_cast<std::size_t>(d + 1), 3);
        } while (all_zero(b));
        return all_zero(h_m_coordinates(b, m)) ? seed_witness(seed, t, b) : std::string();
    });
    for (auto& r : results) {
        if (!r.empty()) rep.fail(r + ": h_m vanishes");
    }
    return rep;
}

/// h_m o h_n = h_{mn} on P^d at random points.
inline CheckReport semigroup_check(int d, int m, int n, std::size_t trials, std::uint64_t seed) {
    CheckReport rep{"hm-semigroup", "d=" + std::to_string(d) + ",m=" + std::to_string(m) + ",n=" + std::to_string(n),
                    "sampled", trials, {}, {}};
    auto results = parallel_map(trials, [&](std::size_t t) -> std::string {
        Rng rng = trial_rng(seed, t);
        std::vector<Rational> b;
        do {
            b = random_tuple(rng, static_cast<std::size_t>(d + 1), 5);
        } while (all_zero(b));
        auto lhs = normalize_proj(h_m_coordinates(h_m_coordinates(b, n), m));
        return lhs == h_m_projective(b, m * n) ? std::string() : seed_witness(seed, t, b);
    });
    for (auto& r : results) {
        if (!r.empty()) rep.fail(r);
    }
    return rep;
}

/// Everything above for one (d, m): the "hm" verification suite.
inline CheckReport hm_suite(int d, int m, std::size_t trials, std::uint64_t seed) {
    CheckReport rep{"hm", "d=" + std::to_string(d) + ",m=" + std::to_string(m), "sampled", 0, {}, {}};
    rep.absorb(conjugacy_suite(d, m, trials, seed));
    rep.absorb(strata_restriction_check(d, m, trials, seed));
    rep.absorb(zero_locus_check(d, m, trials, seed));
    for (int n = 1; n * m <= kMaxM && n <= 3; ++n) rep.absorb(semigroup_check(d, m, n, trials, seed));
    return rep;
}

}  // namespace landen
