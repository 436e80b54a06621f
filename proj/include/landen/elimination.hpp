#pragma once

/**
 * @file elimination.hpp
 * @brief Resultant and discriminant identities satisfied by the universal pair.
 *
 * Every resultant and discriminant is taken at formal degree d: coefficient
 * lists always have d+1 entries, even when leading coefficients vanish.
 */

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "landen.hpp"
#include "resultant.hpp"

namespace landen {

/// Descending z-coefficients of p at formal degree d.
inline std::vector<MultiPoly<Integer>> z_coefficients(const MultiPoly<Integer>& p, int d) {
    std::vector<MultiPoly<Integer>> out;
    for (int i = 0; i <= d; ++i) out.push_back(coefficient_of(p, 0, static_cast<std::uint32_t>(d - i)));
    return out;
}

/// [a_0, ..., a_d] or [b_0, ..., b_d] as polynomials over landen_vars(d).
inline std::vector<MultiPoly<Integer>> coefficient_variables(int d, char which) {
    std::vector<MultiPoly<Integer>> out;
    for (int i = 0; i <= d; ++i) out.push_back(MultiPoly<Integer>::variable(landen_vars(d), which + std::to_string(i)));
    return out;
}

/// Evaluates a polynomial in the b variables of landen_vars(d) at b.
template <exact_ring R>
R evaluate_in_b(const MultiPoly<Integer>& p, int d, const std::vector<R>& b) {
    std::vector<std::optional<R>> vals(p.vars().size());
    for (int i = 0; i <= d; ++i) vals[b_index(d, i)] = b[static_cast<std::size_t>(i)];
    auto r = evaluate_partial(p, vals, b[0].zero_like(), [&](const Integer& c) { return b[0].embed(c); });
    if (r.total_degree() > 0) throw invalid_argument("evaluate_in_b: polynomial involves variables other than b");
    return r.constant_term();
}

namespace detail {

inline MultiPoly<Integer> compute_disc_ratio(int d, int m) {
    const auto& P = generic_gh(d, m, 0);
    if (d == 1) return MultiPoly<Integer>::constant(landen_vars(d), Integer(1));
    auto dh = discriminant(z_coefficients(P.H, d));
    auto df = discriminant(coefficient_variables(d, 'b'));
    try {
        return exact_divide(dh, df);
    } catch (const not_divisible& e) {
        throw invariant_violation("Disc(F_b) does not divide Disc(H) at d=" + std::to_string(d) + ", m=" +
                                  std::to_string(m) + "; remainder " + e.remainder());
    }
}

}  // namespace detail

/// Disc(H_{b,m}) / Disc(F_b) in Z[b], both at formal degree d. Cached.
inline const MultiPoly<Integer>& disc_ratio(int d, int m) {
    if (d < 1 || m < 1) throw invalid_argument("disc_ratio: need d >= 1 and m >= 1");
    if (d > 4 || m > 6) throw guard_exceeded("disc_ratio limited to d <= 4, m <= 6");
    struct Entry {
        std::once_flag once;
        MultiPoly<Integer> value{VarSet()};
    };
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::shared_ptr<Entry>> table;
    std::shared_ptr<Entry> e;
    {
        std::lock_guard lock(mutex);
        auto& slot = table[{d, m}];
        if (!slot) slot = std::make_shared<Entry>();
        e = slot;
    }
    std::call_once(e->once, [&] { e->value = detail::compute_disc_ratio(d, m); });
    return e->value;
}

/// Sign xi = (-1)^(d(m-k+1)) of the resultant identity.
inline int resultant_sign(int d, int m, int k) { return sign_power(static_cast<long>(d) * (m - k + 1)); }

/// Which power of b0 multiplies the resultant identity. The literal form
/// uses b0^(m-1); it fails bidegree counting by b0^k when k >= 1.
enum class ResultantForm { corrected, literal };

inline unsigned resultant_b0_power(int m, int k, ResultantForm form) {
    return static_cast<unsigned>(form == ResultantForm::corrected ? m - 1 + k : m - 1);
}

/// Right-hand side xi b0^e bd^(m-1-k) Res(F_a, F_b) Disc(H)/Disc(F_b) in Z[a, b].
inline MultiPoly<Integer> resultant_identity_rhs(int d, int m, int k, ResultantForm form = ResultantForm::corrected) {
    auto a = coefficient_variables(d, 'a'), b = coefficient_variables(d, 'b');
    auto res = sylvester_resultant(a, b);
    auto factor = b[0].pow(resultant_b0_power(m, k, form)) * b[static_cast<std::size_t>(d)].pow(static_cast<unsigned>(m - 1 - k));
    return factor * res * disc_ratio(d, m) * Integer(resultant_sign(d, m, k));
}

/// The same right-hand side specialized at (a, b).
inline Rational resultant_identity_rhs(int d, int m, int k, const std::vector<Rational>& a, const std::vector<Rational>& b,
                                       ResultantForm form = ResultantForm::corrected) {
    return Rational(resultant_sign(d, m, k)) * pow(b[0], static_cast<unsigned long>(resultant_b0_power(m, k, form))) *
           pow(b[static_cast<std::size_t>(d)], static_cast<unsigned long>(m - 1 - k)) * sylvester_resultant(a, b) *
           evaluate_in_b(disc_ratio(d, m), d, b);
}

/**
 * Res(G, H) = (-1)^(d(m-k+1)) b0^e bd^(m-1-k) Res(F_a, F_b) Disc(H)/Disc(F_b),
 * as an identity in Z[a, b] (symbolic) or at random points over Q (sampled).
 * e = m-1+k by default; see ResultantForm.
 */
inline CheckReport verify_resultant_identity(int d, int m, int k, const CheckMode& mode,
                                             ResultantForm form = ResultantForm::corrected) {
    check_index(d, m, k);
    CheckReport rep{"resultant", "d=" + std::to_string(d) + ",m=" + std::to_string(m) + ",k=" + std::to_string(k),
                    mode.name(), 0, {}, {}};
    const auto& P = generic_gh(d, m, k);
    if (form == ResultantForm::corrected && k > 0) {
        rep.note("b0 exponent m-1+k; the literal exponent m-1 is short by b0^k");
    }
    if (mode.is_symbolic()) {
        if (d > 2 || m > 3) throw guard_exceeded("symbolic resultant identity limited to d <= 2, m <= 3");
        rep.trials = 1;
        auto lhs = sylvester_resultant(z_coefficients(P.G, d), z_coefficients(P.H, d));
        auto rhs = resultant_identity_rhs(d, m, k, form);
        if (!(lhs == rhs)) rep.fail("Res(G,H) - rhs = " + (lhs - rhs).to_string());
        return rep;
    }
    rep.trials = mode.trials;
    disc_ratio(d, m);  // fill the cache before the workers start
    auto results = parallel_map(mode.trials, [&](std::size_t t) -> std::string {
        Rng rng = trial_rng(mode.seed, t);
        auto a = random_rationals(rng, static_cast<std::size_t>(d + 1), 9);
        auto b = random_rationals(rng, static_cast<std::size_t>(d + 1), 9);
        auto c = evaluate_coordinates(P, a, b);
        std::vector<Rational> g(c.begin(), c.begin() + d + 1), h(c.begin() + d + 1, c.end());
        Rational lhs = sylvester_resultant(g, h);
        Rational rhs = resultant_identity_rhs(d, m, k, a, b, form);
        if (lhs == rhs) return {};
        return "seed=" + std::to_string(mode.seed) + " trial=" + std::to_string(t) + " " +
               describe(RatFunc<Rational>(a, b)) + " lhs=" + lhs.to_string() + " rhs=" + rhs.to_string();
    });
    for (auto& r : results) {
        if (!r.empty()) rep.fail(r);
    }
    return rep;
}

/// Descending coefficients of c prod (z - r_i).
template <exact_field F>
std::vector<F> poly_from_roots(const F& lead, const std::vector<F>& roots) {
    UPoly<F> p(lead.zero_like(), {lead});
    for (const auto& r : roots) p = p * UPoly<F>(lead.zero_like(), {-r, lead.one_like()});
    return p.descending(roots.size());
}

/// Res(G, H) for F_a = z^d, F_b = (z - 1)^d.
inline Rational special_pair_resultant(int d, int m, int k) {
    std::vector<Rational> a(static_cast<std::size_t>(d + 1), Rational(0));
    a[0] = Rational(1);
    auto b = poly_from_roots(Rational(1), std::vector<Rational>(static_cast<std::size_t>(d), Rational(1)));
    auto c = evaluate_coordinates(generic_gh(d, m, k), a, b);
    std::vector<Rational> g(c.begin(), c.begin() + d + 1), h(c.begin() + d + 1, c.end());
    return sylvester_resultant(g, h);
}

/// The sign calibration pair: Res(G, H) = (-1)^d m^(d(d-1)), and the
/// right-hand side with disc_ratio evaluated at b agrees.
inline CheckReport special_pair_check(int d, int m, int k) {
    CheckReport rep{"special-pair", "d=" + std::to_string(d) + ",m=" + std::to_string(m) + ",k=" + std::to_string(k),
                    "exact", 1, {}, {}};
    const Rational lhs = special_pair_resultant(d, m, k);
    const Rational expect = Rational(sign_power(d)) * Rational(pow(Integer(m), static_cast<unsigned long>(d * (d - 1))));
    if (!(lhs == expect)) rep.fail("Res(G,H) = " + lhs.to_string() + ", expected " + expect.to_string());
    std::vector<Rational> a(static_cast<std::size_t>(d + 1), Rational(0));
    a[0] = Rational(1);
    auto b = poly_from_roots(Rational(1), std::vector<Rational>(static_cast<std::size_t>(d), Rational(1)));
    const Rational rhs = resultant_identity_rhs(d, m, k, a, b);
    if (!(rhs == lhs)) rep.fail("right-hand side " + rhs.to_string() + " differs from Res(G,H) = " + lhs.to_string());
    return rep;
}

/// H_{b,m}(z) = (-1)^((m+1)d) b0^m prod (z - beta_i^m) for F_b = b0 prod (z - beta_i).
inline bool h_factorization_check(const Rational& b0, const std::vector<Rational>& roots, int m) {
    const int d = static_cast<int>(roots.size());
    auto b = poly_from_roots(b0, roots);
    auto c = evaluate_coordinates(generic_gh(d, m, 0), std::vector<Rational>(static_cast<std::size_t>(d + 1), Rational(0)), b);
    std::vector<Rational> h(c.begin() + d + 1, c.end());
    std::vector<Rational> powers;
    for (const auto& r : roots) powers.push_back(pow(r, static_cast<unsigned long>(m)));
    const Rational lead = Rational(sign_power(static_cast<long>(m + 1) * d)) * pow(b0, static_cast<unsigned long>(m));
    return h == poly_from_roots(lead, powers);
}

/// b0 bd disc_ratio(d, m)(b) != 0, with no root finding.
inline bool is_m_nondegenerate(const std::vector<Rational>& b, int m) {
    const int d = static_cast<int>(b.size()) - 1;
    if (d < 1) throw invalid_argument("is_m_nondegenerate: need d >= 1");
    if (b.front().is_zero() || b.back().is_zero()) return false;
    return !evaluate_in_b(disc_ratio(d, m), d, b).is_zero();
}

/// Res(G, H) != 0 at phi; throws invariant_violation if this disagrees with
/// the observed degree of the transform.
template <exact_field F>
bool degree_preservation_check(const RatFunc<F>& phi, int m, int k) {
    auto r = transform_full(phi, m, k);
    const bool observed = r.degree == phi.d();
    if (observed != r.degree_preserved) {
        throw invariant_violation("resultant criterion disagrees with the degree of the transform");
    }
    return r.degree_preserved;
}

}  // namespace landen
