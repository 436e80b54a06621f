#pragma once

/**
 * @file multipoly.hpp
 * @brief Sparse multivariate polynomials over an exact coefficient ring.
 *
 * Terms are kept in a map ordered by descending graded-lexicographic order
 * (variables compared in VarSet order), so iteration starts at the leading
 * term and serialization is canonical. Zero coefficients are never stored.
 */

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "integer.hpp"

namespace landen {

/// Coefficient protocol shared by Integer, Rational, PrimeField and CyclotomicInt.
template <class R>
concept exact_ring = std::copyable<R> && requires(const R a, const R b, const Integer n) {
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { -a } -> std::convertible_to<R>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.zero_like() } -> std::convertible_to<R>;
    { a.one_like() } -> std::convertible_to<R>;
    { a.embed(n) } -> std::convertible_to<R>;
    { a.to_string() } -> std::convertible_to<std::string>;
};

/// Rings with a partial exact division (fields, or Z with divisibility test).
template <class R>
concept exact_division_ring = exact_ring<R> && requires(const R a, const R b) {
    { try_divide(a, b) } -> std::convertible_to<std::optional<R>>;
};

template <class F>
concept exact_field = exact_ring<F> && requires(const F a, const F b) {
    { a / b } -> std::convertible_to<F>;
    { a.inverse() } -> std::convertible_to<F>;
};

/// Ordered list of distinct variable names; shared between polynomials.
class VarSet {
public:
    VarSet() : names_(std::make_shared<const std::vector<std::string>>()) {}

    explicit VarSet(std::vector<std::string> names) {
        for (std::size_t i = 0; i < names.size(); ++i) {
            for (std::size_t j = 0; j < i; ++j) {
                if (names[i] == names[j]) throw invalid_argument("duplicate variable " + names[i]);
            }
        }
        names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
    }

    /// {lead} + {a0..ad} + {b0..bd}; lead is "z" or "w".
    static VarSet canonical(int d, const std::string& lead = "z") {
        std::vector<std::string> names{lead};
        for (int i = 0; i <= d; ++i) names.push_back("a" + std::to_string(i));
        for (int i = 0; i <= d; ++i) names.push_back("b" + std::to_string(i));
        return VarSet(std::move(names));
    }

    std::size_t size() const noexcept { return names_->size(); }
    const std::string& name(std::size_t i) const { return names_->at(i); }
    const std::vector<std::string>& names() const noexcept { return *names_; }

    std::optional<std::size_t> find(const std::string& n) const {
        for (std::size_t i = 0; i < names_->size(); ++i) {
            if ((*names_)[i] == n) return i;
        }
        return std::nullopt;
    }

    std::size_t index(const std::string& n) const {
        auto i = find(n);
        if (!i) throw invalid_argument("unknown variable " + n);
        return *i;
    }

    friend bool operator==(const VarSet& x, const VarSet& y) {
        return x.names_ == y.names_ || *x.names_ == *y.names_;
    }

private:
    std::shared_ptr<const std::vector<std::string>> names_;
};

/// Exponent vector aligned with a VarSet.
struct Monomial {
    std::vector<std::uint32_t> exps;

    Monomial() = default;
    explicit Monomial(std::size_t n) : exps(n, 0) {}
    explicit Monomial(std::vector<std::uint32_t> e) : exps(std::move(e)) {}

    std::uint64_t degree() const noexcept {
        std::uint64_t s = 0;
        for (auto e : exps) s += e;
        return s;
    }

    bool divides(const Monomial& o) const noexcept {
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] > o.exps[i]) return false;
        }
        return true;
    }

    friend Monomial operator*(const Monomial& x, const Monomial& y) {
        Monomial r(x.exps.size());
        for (std::size_t i = 0; i < x.exps.size(); ++i) r.exps[i] = x.exps[i] + y.exps[i];
        return r;
    }

    /// Quotient x / y; caller guarantees y divides x.
    friend Monomial operator/(const Monomial& x, const Monomial& y) {
        Monomial r(x.exps.size());
        for (std::size_t i = 0; i < x.exps.size(); ++i) r.exps[i] = x.exps[i] - y.exps[i];
        return r;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Strict "greater" in graded-lex order: higher total degree first, then lex.
struct GrlexGreater {
    bool operator()(const Monomial& x, const Monomial& y) const noexcept {
        auto dx = x.degree();
        auto dy = y.degree();
        if (dx != dy) return dx > dy;
        return x.exps > y.exps;
    }
};

/// Per-variable integer weights.
struct WeightSystem {
    std::vector<long> weights;

    long weight(const Monomial& mono) const {
        long s = 0;
        for (std::size_t i = 0; i < mono.exps.size(); ++i) s += weights.at(i) * static_cast<long>(mono.exps[i]);
        return s;
    }

    /// wt(lead) = lead_weight, wt(a_i) = wt(b_i) = i, for VarSet::canonical(d).
    static WeightSystem canonical(int d, long lead_weight) {
        WeightSystem w;
        w.weights.push_back(lead_weight);
        for (int i = 0; i <= d; ++i) w.weights.push_back(i);
        for (int i = 0; i <= d; ++i) w.weights.push_back(i);
        return w;
    }
};

/// Outcome of a grading check: homogeneous or not, and the common grade.
template <class Grade>
struct Grading {
    bool homogeneous = true;
    std::optional<Grade> grade;  // empty for the zero polynomial
};

template <exact_ring R>
class MultiPoly {
public:
    using coeff_type = R;
    using term_map = std::map<Monomial, R, GrlexGreater>;

    explicit MultiPoly(VarSet vars)
        requires std::default_initializable<R>
        : vars_(std::move(vars)), zero_(R()) {}

    MultiPoly(VarSet vars, R zero) : vars_(std::move(vars)), zero_(zero.zero_like()) {}

    static MultiPoly constant(const VarSet& vars, const R& c) {
        MultiPoly p(vars, c);
        p.add_term(Monomial(vars.size()), c);
        return p;
    }

    static MultiPoly variable(const VarSet& vars, const std::string& name, const R& proto) {
        MultiPoly p(vars, proto);
        Monomial m(vars.size());
        m.exps[vars.index(name)] = 1;
        p.add_term(m, proto.one_like());
        return p;
    }

    static MultiPoly variable(const VarSet& vars, const std::string& name)
        requires std::default_initializable<R>
    {
        return variable(vars, name, R());
    }

    static MultiPoly term(const VarSet& vars, Monomial mono, const R& c) {
        MultiPoly p(vars, c);
        p.add_term(std::move(mono), c);
        return p;
    }

    const VarSet& vars() const noexcept { return vars_; }
    const R& ring_zero() const noexcept { return zero_; }
    const term_map& terms() const noexcept { return terms_; }
    std::size_t num_terms() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Adds c * mono, dropping the term if it cancels.
    void add_term(const Monomial& mono, const R& c) {
        if (mono.exps.size() != vars_.size()) throw invalid_argument("monomial length mismatch");
        if (c.is_zero()) return;
        auto it = terms_.find(mono);
        if (it == terms_.end()) {
            terms_.emplace(mono, c);
            return;
        }
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    const std::pair<const Monomial, R>& leading() const {
        if (terms_.empty()) throw invalid_argument("leading term of zero polynomial");
        return *terms_.begin();
    }

    R coefficient(const Monomial& mono) const {
        auto it = terms_.find(mono);
        return it == terms_.end() ? zero_ : it->second;
    }

    long total_degree() const {
        long d = -1;
        for (const auto& [m, c] : terms_) d = std::max<long>(d, static_cast<long>(m.degree()));
        return d;
    }

    /// Largest exponent of var; -1 for the zero polynomial.
    long degree_in(std::size_t var) const {
        long d = -1;
        for (const auto& [m, c] : terms_) d = std::max<long>(d, m.exps[var]);
        return d;
    }
    long degree_in(const std::string& var) const { return degree_in(vars_.index(var)); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
    }

    /// Constant term (zero if absent).
    R constant_term() const { return coefficient(Monomial(vars_.size())); }

    MultiPoly operator-() const {
        MultiPoly r(vars_, zero_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        check(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        check(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    MultiPoly& operator*=(const MultiPoly& o) {
        *this = *this * o;
        return *this;
    }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { a += b; return a; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { a -= b; return a; }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.check(b);
        MultiPoly r(a.vars_, a.zero_);
        if (a.is_zero() || b.is_zero()) return r;
        // Accumulate in a hash table, then build the ordered map once.
        std::unordered_map<Monomial, R, MonomialHash> acc;
        acc.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                Monomial mm = ma * mb;
                auto it = acc.find(mm);
                if (it == acc.end()) {
                    acc.emplace(std::move(mm), ca * cb);
                } else {
                    it->second = it->second + ca * cb;
                }
            }
        }
        for (auto& [m, c] : acc) {
            if (!c.is_zero()) r.terms_.emplace(m, std::move(c));
        }
        return r;
    }

    /// Scalar multiple.
    friend MultiPoly operator*(const MultiPoly& a, const R& s) {
        MultiPoly r(a.vars_, a.zero_);
        if (s.is_zero()) return r;
        for (const auto& [m, c] : a.terms_) {
            R v = c * s;
            if (!v.is_zero()) r.terms_.emplace(m, std::move(v));
        }
        return r;
    }

    MultiPoly pow(unsigned e) const {
        MultiPoly r = constant(vars_, zero_.one_like());
        MultiPoly b = *this;
        while (e) {
            if (e & 1u) r = r * b;
            e >>= 1u;
            if (e) b = b * b;
        }
        return r;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        if (!(a.vars_ == b.vars_)) return false;
        if (a.terms_.size() != b.terms_.size()) return false;
        auto it = b.terms_.begin();
        for (const auto& [m, c] : a.terms_) {
            if (!(m == it->first) || !(c == it->second)) return false;
            ++it;
        }
        return true;
    }

    /// Human-readable form, e.g. "2*a0*b1^2*z - 3".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            std::string cs = c.to_string();
            bool neg = !cs.empty() && cs[0] == '-';
            bool unit = (cs == "1" || cs == "-1");
            bool has_vars = m.degree() > 0;
            if (first) {
                if (neg) os << "-";
            } else {
                os << (neg ? " - " : " + ");
            }
            std::string body = neg ? cs.substr(1) : cs;
            bool sep = false;
            if (!(unit && has_vars)) {
                os << body;
                sep = true;
            }
            for (std::size_t i = 0; i < m.exps.size(); ++i) {
                if (m.exps[i] == 0) continue;
                if (sep) os << "*";
                os << vars_.name(i);
                if (m.exps[i] > 1) os << "^" << m.exps[i];
                sep = true;
            }
            first = false;
        }
        return os.str();
    }

    /// Applies f to every coefficient, producing a polynomial over S.
    template <exact_ring S, class Fn>
    MultiPoly<S> map_coefficients(const S& target_zero, Fn&& f) const {
        MultiPoly<S> r(vars_, target_zero);
        for (const auto& [m, c] : terms_) r.add_term(m, f(c));
        return r;
    }

    /// Same terms, reinterpreted over a VarSet of the same length (renaming).
    MultiPoly with_vars(const VarSet& other) const {
        if (other.size() != vars_.size()) throw invalid_argument("with_vars: size mismatch");
        MultiPoly r(other, zero_);
        r.terms_ = terms_;
        return r;
    }

private:
    template <exact_ring> friend class MultiPoly;

    struct MonomialHash {
        std::size_t operator()(const Monomial& m) const noexcept {
            std::size_t h = 0xcbf29ce484222325ull;
            for (auto e : m.exps) {
                h ^= e + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            }
            return h;
        }
    };

    void check(const MultiPoly& o) const {
        if (!(vars_ == o.vars_)) throw ring_mismatch("polynomials over different variable sets");
        if (!(zero_ == o.zero_)) throw ring_mismatch("polynomials over different coefficient rings");
    }

    VarSet vars_;
    R zero_;
    term_map terms_;
};

/**
 * Simultaneous substitution: replacement[i], when present, is substituted
 * for variable i. Variables without a replacement are kept. All
 * replacements must share the VarSet of p.
 */
template <exact_ring R>
MultiPoly<R> substitute_all(const MultiPoly<R>& p,
                            const std::vector<std::optional<MultiPoly<R>>>& replacement) {
    const std::size_t n = p.vars().size();
    if (replacement.size() != n) throw invalid_argument("substitute_all: replacement count mismatch");
    for (const auto& r : replacement) {
        if (r && !(r->vars() == p.vars())) throw ring_mismatch("substitute_all: VarSet mismatch");
    }
    // Power caches per substituted variable.
    std::vector<std::vector<MultiPoly<R>>> powers(n);
    auto power = [&](std::size_t v, std::uint32_t e) -> const MultiPoly<R>& {
        auto& cache = powers[v];
        if (cache.empty()) cache.push_back(MultiPoly<R>::constant(p.vars(), p.ring_zero().one_like()));
        while (cache.size() <= e) cache.push_back(cache.back() * *replacement[v]);
        return cache[e];
    };
    MultiPoly<R> result(p.vars(), p.ring_zero());
    for (const auto& [mono, c] : p.terms()) {
        Monomial kept(n);
        std::vector<std::pair<std::size_t, std::uint32_t>> subs;
        for (std::size_t i = 0; i < n; ++i) {
            if (mono.exps[i] == 0) continue;
            if (replacement[i]) {
                subs.emplace_back(i, mono.exps[i]);
            } else {
                kept.exps[i] = mono.exps[i];
            }
        }
        MultiPoly<R> t = MultiPoly<R>::term(p.vars(), kept, c);
        for (auto [v, e] : subs) t = t * power(v, e);
        result += t;
    }
    return result;
}

/// Substitutes `by` for the named variable. Unknown names are an error;
/// a variable that does not occur leaves p unchanged.
template <exact_ring R>
MultiPoly<R> substitute(const MultiPoly<R>& p, const std::string& var, const MultiPoly<R>& by) {
    std::vector<std::optional<MultiPoly<R>>> rep(p.vars().size());
    rep[p.vars().index(var)] = by;
    return substitute_all(p, rep);
}

/// Coefficient of var^k, as a polynomial in the remaining variables.
template <exact_ring R>
MultiPoly<R> coefficient_of(const MultiPoly<R>& p, std::size_t var, std::uint32_t k) {
    MultiPoly<R> r(p.vars(), p.ring_zero());
    for (const auto& [mono, c] : p.terms()) {
        if (mono.exps[var] != k) continue;
        Monomial m = mono;
        m.exps[var] = 0;
        r.add_term(m, c);
    }
    return r;
}

template <exact_ring R>
MultiPoly<R> coefficient_of(const MultiPoly<R>& p, const std::string& var, std::uint32_t k) {
    return coefficient_of(p, p.vars().index(var), k);
}

/// Formal partial derivative.
template <exact_ring R>
MultiPoly<R> derivative(const MultiPoly<R>& p, std::size_t var) {
    MultiPoly<R> r(p.vars(), p.ring_zero());
    for (const auto& [mono, c] : p.terms()) {
        if (mono.exps[var] == 0) continue;
        Monomial m = mono;
        m.exps[var] -= 1;
        r.add_term(m, c * c.embed(Integer(static_cast<unsigned long>(mono.exps[var]))));
    }
    return r;
}

template <exact_ring R>
MultiPoly<R> derivative(const MultiPoly<R>& p, const std::string& var) {
    return derivative(p, p.vars().index(var));
}

/**
 * Exact quotient p / q by single-divisor division under the fixed term
 * order. Throws not_divisible, with the remainder as witness, when q does
 * not divide p.
 */
template <exact_division_ring R>
MultiPoly<R> exact_divide(const MultiPoly<R>& p, const MultiPoly<R>& q) {
    if (q.is_zero()) throw invalid_argument("exact_divide: division by zero polynomial");
    if (!(p.vars() == q.vars())) throw ring_mismatch("exact_divide: VarSet mismatch");
    const auto& [lm, lc] = q.leading();
    MultiPoly<R> quot(p.vars(), p.ring_zero());
    MultiPoly<R> rem = p;
    while (!rem.is_zero()) {
        const auto& [rm, rc] = rem.leading();
        std::optional<R> c;
        if (lm.divides(rm)) c = try_divide(rc, lc);
        if (!c) {
            throw not_divisible("exact_divide: " + q.to_string() + " does not divide the dividend",
                                rem.to_string());
        }
        MultiPoly<R> t = MultiPoly<R>::term(p.vars(), rm / lm, *c);
        quot += t;
        rem -= t * q;
    }
    return quot;
}

/// Checks that every term has the same grade under `grade_of`.
template <exact_ring R, class Fn>
auto grading_check(const MultiPoly<R>& p, Fn&& grade_of) {
    using G = std::decay_t<decltype(grade_of(std::declval<const Monomial&>()))>;
    Grading<G> g;
    for (const auto& [mono, c] : p.terms()) {
        G v = grade_of(mono);
        if (!g.grade) {
            g.grade = v;
        } else if (!(*g.grade == v)) {
            g.homogeneous = false;
        }
    }
    if (!g.homogeneous) g.grade.reset();
    return g;
}

/// Total degree in the listed variables only.
template <exact_ring R>
Grading<long> degree_grading(const MultiPoly<R>& p, const std::vector<std::size_t>& vars) {
    return grading_check(p, [&](const Monomial& m) {
        long s = 0;
        for (auto v : vars) s += m.exps[v];
        return s;
    });
}

/// Bi-degree in two disjoint variable groups.
template <exact_ring R>
Grading<std::pair<long, long>> bidegree_grading(const MultiPoly<R>& p,
                                                const std::vector<std::size_t>& first,
                                                const std::vector<std::size_t>& second) {
    return grading_check(p, [&](const Monomial& m) {
        long s = 0, t = 0;
        for (auto v : first) s += m.exps[v];
        for (auto v : second) t += m.exps[v];
        return std::make_pair(s, t);
    });
}

template <exact_ring R>
Grading<long> weight_grading(const MultiPoly<R>& p, const WeightSystem& w) {
    return grading_check(p, [&](const Monomial& m) { return w.weight(m); });
}

/// Content (positive gcd of coefficients) and primitive part; p = content * primitive.
inline std::pair<Integer, MultiPoly<Integer>> content_primitive(const MultiPoly<Integer>& p) {
    if (p.is_zero()) throw invalid_argument("content of the zero polynomial");
    Integer g(0);
    for (const auto& [m, c] : p.terms()) g = gcd(g, c);
    MultiPoly<Integer> prim(p.vars());
    for (const auto& [m, c] : p.terms()) prim.add_term(m, *try_divide(c, g));
    return {g, prim};
}

/// Drops every term divisible by one of the generator monomials, i.e. the
/// normal form modulo a monomial ideal.
template <exact_ring R>
MultiPoly<R> reduce_mod_monomials(const MultiPoly<R>& p, const std::vector<Monomial>& generators) {
    MultiPoly<R> r(p.vars(), p.ring_zero());
    for (const auto& [mono, c] : p.terms()) {
        bool in_ideal = std::any_of(generators.begin(), generators.end(),
                                    [&](const Monomial& g) { return g.divides(mono); });
        if (!in_ideal) r.add_term(mono, c);
    }
    return r;
}

/**
 * Evaluates the listed variables at values in S (others stay symbolic),
 * mapping coefficients with `lift`.
 */
template <exact_ring R, exact_ring S, class Lift>
MultiPoly<S> evaluate_partial(const MultiPoly<R>& p, const std::vector<std::optional<S>>& values,
                              const S& target_zero, Lift&& lift) {
    const std::size_t n = p.vars().size();
    if (values.size() != n) throw invalid_argument("evaluate_partial: value count mismatch");
    std::vector<std::vector<S>> pw(n);
    auto power = [&](std::size_t v, std::uint32_t e) -> const S& {
        auto& cache = pw[v];
        if (cache.empty()) cache.push_back(target_zero.one_like());
        while (cache.size() <= e) cache.push_back(cache.back() * *values[v]);
        return cache[e];
    };
    MultiPoly<S> r(p.vars(), target_zero);
    for (const auto& [mono, c] : p.terms()) {
        S coeff = lift(c);
        Monomial kept(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (mono.exps[i] == 0) continue;
            if (values[i]) {
                coeff = coeff * power(i, mono.exps[i]);
            } else {
                kept.exps[i] = mono.exps[i];
            }
        }
        r.add_term(kept, coeff);
    }
    return r;
}

}  // namespace landen
