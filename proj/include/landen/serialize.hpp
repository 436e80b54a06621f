#pragma once

/**
 * @file serialize.hpp
 * @brief JSON and LaTeX forms of polynomials, rational functions, generic
 * pairs and verification reports.
 *
 * JSON schemas:
 *   poly    {"vars": [names], "terms": [{"exps": [ints], "coeff": string | [strings]}]}
 *   ratfunc {"d": int, "num": [strings], "den": [strings], "field": "Q" | "Fp:<p>"}
 *   pair    {"d": int, "m": int, "k": int, "G": poly, "H": poly}
 *   report  {"identity", "grid", "mode", "trials", "failures": [strings], "notes": [strings]}
 * Coefficient lists are descending: index 0 multiplies z^d.
 */

#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "jacobian.hpp"
#include "landen.hpp"

namespace landen {

using json = nlohmann::ordered_json;

inline json coeff_to_json(const Integer& c) { return c.to_string(); }
inline json coeff_to_json(const Rational& c) { return c.to_string(); }
inline json coeff_to_json(const PrimeField& c) { return c.to_string(); }
inline json coeff_to_json(const CyclotomicInt& c) {
    json out = json::array();
    for (const auto& x : c.coeffs()) out.push_back(x.to_string());
    return out;
}

template <exact_ring R>
json poly_to_json(const MultiPoly<R>& p) {
    json terms = json::array();
    for (const auto& [mono, c] : p.terms()) terms.push_back({{"exps", mono.exps}, {"coeff", coeff_to_json(c)}});
    return {{"vars", p.vars().names()}, {"terms", terms}};
}

namespace detail {

template <class T>
T parse_guarded(const std::string& what, auto&& fn) {
    try {
        return fn();
    } catch (const json::exception& e) {
        throw parse_error(what + ": " + e.what());
    } catch (const invalid_argument& e) {
        throw parse_error(what + ": " + e.what());
    }
}

}  // namespace detail

/// Integer polynomial from JSON; terms are re-added, so order in the input is free.
inline MultiPoly<Integer> poly_from_json(const json& j) {
    return detail::parse_guarded<MultiPoly<Integer>>("poly", [&] {
        VarSet V(j.at("vars").get<std::vector<std::string>>());
        MultiPoly<Integer> p(V);
        for (const auto& t : j.at("terms")) {
            auto e = t.at("exps").get<std::vector<std::uint32_t>>();
            if (e.size() != V.size()) throw parse_error("poly: exponent vector length differs from vars");
            p.add_term(Monomial(std::move(e)), Integer::from_string(t.at("coeff").get<std::string>()));
        }
        return p;
    });
}

template <exact_field F>
json ratfunc_to_json(const RatFunc<F>& phi) {
    json num = json::array(), den = json::array();
    for (const auto& c : phi.num()) num.push_back(c.to_string());
    for (const auto& c : phi.den()) den.push_back(c.to_string());
    return {{"d", phi.d()}, {"num", num}, {"den", den}, {"field", phi.field()}};
}

using AnyRatFunc = std::variant<RatFunc<Rational>, RatFunc<PrimeField>>;

/// "Q" or "Fp:<p>" -> 0 or p.
inline std::uint64_t parse_field(const std::string& tag) {
    if (tag == "Q") return 0;
    if (tag.rfind("Fp:", 0) == 0) {
        try {
            std::size_t used = 0;
            auto p = std::stoull(tag.substr(3), &used);
            if (used == tag.size() - 3) return p;
        } catch (const std::exception&) {
        }
    }
    throw parse_error("field: expected \"Q\" or \"Fp:<p>\", got \"" + tag + "\"");
}

/// Descending coefficient strings over Q, or reduced mod p when p > 0.
inline AnyRatFunc make_ratfunc(const std::vector<std::string>& num, const std::vector<std::string>& den, std::uint64_t p) {
    std::vector<Rational> n, dn;
    detail::parse_guarded<int>("coefficients", [&] {
        for (const auto& s : num) n.push_back(Rational::from_string(s));
        for (const auto& s : den) dn.push_back(Rational::from_string(s));
        return 0;
    });
    if (p == 0) return RatFunc<Rational>(n, dn);
    std::vector<PrimeField> np, dp;
    for (const auto& x : n) np.push_back(PrimeField::from_rational(x, p));
    for (const auto& x : dn) dp.push_back(PrimeField::from_rational(x, p));
    return RatFunc<PrimeField>(np, dp);
}

inline AnyRatFunc ratfunc_from_json(const json& j) {
    return detail::parse_guarded<AnyRatFunc>("ratfunc", [&] {
        auto num = j.at("num").get<std::vector<std::string>>();
        auto den = j.at("den").get<std::vector<std::string>>();
        if (j.contains("d") && j.at("d").get<int>() + 1 != static_cast<int>(num.size())) {
            throw parse_error("ratfunc: \"d\" disagrees with the coefficient count");
        }
        return make_ratfunc(num, den, parse_field(j.value("field", std::string("Q"))));
    });
}

inline json pair_to_json(const LandenPair& P) {
    return {{"d", P.d}, {"m", P.m}, {"k", P.k}, {"G", poly_to_json(P.G)}, {"H", poly_to_json(P.H)}};
}

inline LandenPair pair_from_json(const json& j) {
    return detail::parse_guarded<LandenPair>("pair", [&] {
        return LandenPair{j.at("d").get<int>(), j.at("m").get<int>(), j.at("k").get<int>(), poly_from_json(j.at("G")),
                          poly_from_json(j.at("H"))};
    });
}

inline json report_to_json(const CheckReport& r) {
    return {{"identity", r.identity}, {"grid", r.grid}, {"mode", r.mode}, {"trials", r.trials},
            {"failures", r.failures}, {"notes", r.notes}};
}

inline CheckReport report_from_json(const json& j) {
    return detail::parse_guarded<CheckReport>("report", [&] {
        CheckReport r{j.at("identity").get<std::string>(), j.at("grid").get<std::string>(),
                      j.at("mode").get<std::string>(), j.at("trials").get<std::size_t>(),
                      j.at("failures").get<std::vector<std::string>>(), {}};
        if (j.contains("notes")) r.notes = j.at("notes").get<std::vector<std::string>>();
        return r;
    });
}

inline json probe_to_json(const ProbeReport& p) {
    json lines = json::array();
    for (const auto& l : p.lines) lines.push_back({{"claim", l.claim}, {"outcome", l.outcome}});
    return {{"identity", "conjecture-probe"}, {"grid", p.grid}, {"mode", "report-only"}, {"lines", lines}};
}

/// "b2" -> "b_{2}"-style LaTeX subscript: "b_2", "a_{10}".
inline std::string latex_var(const std::string& name) {
    if (name.size() < 2) return name;
    const std::string idx = name.substr(1);
    return name.substr(0, 1) + "_" + (idx.size() == 1 ? idx : "{" + idx + "}");
}

/// Coefficient polynomial in a, b (no z), b-variables before a-variables as in the displays.
inline std::string latex_coefficient(const MultiPoly<Integer>& p, std::size_t lead) {
    if (p.is_zero()) return "0";
    const auto& names = p.vars().names();
    std::vector<std::size_t> order;
    for (std::size_t v = 0; v < names.size(); ++v) {
        if (v != lead && names[v][0] == 'b') order.push_back(v);
    }
    for (std::size_t v = 0; v < names.size(); ++v) {
        if (v != lead && names[v][0] != 'b') order.push_back(v);
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, c] : p.terms()) {
        const bool neg = c.sign() < 0;
        const Integer mag = neg ? -c : c;
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        const bool has_vars = mono.degree() > 0;
        if (!(mag.is_one() && has_vars)) os << mag.to_string();
        for (auto v : order) {
            if (mono.exps[v] == 0) continue;
            os << latex_var(names[v]);
            if (mono.exps[v] > 1) os << "^{" << mono.exps[v] << "}";
        }
        first = false;
    }
    return os.str();
}

/// Polynomial in z with coefficients in a, b, collected by descending powers of z.
inline std::string latex_in_z(const MultiPoly<Integer>& p, int d) {
    std::ostringstream os;
    bool first = true;
    for (int e = d; e >= 0; --e) {
        auto c = coefficient_of(p, 0, static_cast<std::uint32_t>(e));
        if (c.is_zero()) continue;
        std::string body = latex_coefficient(c, 0);
        const bool several = c.terms().size() > 1;
        std::string zpart = e == 0 ? "" : (e == 1 ? "z" : "z^{" + std::to_string(e) + "}");
        if (several) {
            body = "(" + body + ")";
        } else if (body == "1" && e > 0) {
            body = "";
        } else if (body == "-1" && e > 0) {
            body = "-";
        }
        if (!first) os << (body.rfind('-', 0) == 0 ? " - " : " + ");
        if (!first && body.rfind('-', 0) == 0) body = body.substr(1);
        os << body << zpart;
        first = false;
    }
    return first ? "0" : os.str();
}

inline std::string pair_to_latex(const LandenPair& P) {
    return "\\mathcal{F}_{" + std::to_string(P.m) + "," + std::to_string(P.k) + "}(\\varphi)(z) = \\frac{" +
           latex_in_z(P.G, P.d) + "}{" + latex_in_z(P.H, P.d) + "}";
}

inline std::string pair_to_text(const LandenPair& P) {
    return "d=" + std::to_string(P.d) + " m=" + std::to_string(P.m) + " k=" + std::to_string(P.k) +
           "\nG = " + P.G.to_string() + "\nH = " + P.H.to_string() + "\n";
}

inline std::string matrix_to_latex(const PolyMatrix& M) {
    std::ostringstream os;
    os << "\\begin{pmatrix}\n";
    for (const auto& row : M) {
        for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " & " : "  ") << latex_coefficient(row[j], row[j].vars().size());
        os << " \\\\\n";
    }
    os << "\\end{pmatrix}";
    return os.str();
}

/// The block display [[A, 0], [C, D]] with rules between the blocks.
inline std::string jacobian_to_latex(const JacobianBlocks& J) {
    const auto full = J.full();
    const std::size_t n = J.A.size();
    std::ostringstream os;
    os << "\\mathcal{J}_{" << J.d << "," << J.m << "," << J.k << "} = \\left(\\begin{array}{" << std::string(n, 'c') << "|"
       << std::string(n, 'c') << "}\n";
    for (std::size_t i = 0; i < full.size(); ++i) {
        if (i == n) os << "  \\hline\n";
        for (std::size_t j = 0; j < full[i].size(); ++j) {
            os << (j ? " & " : "  ") << latex_coefficient(full[i][j], full[i][j].vars().size());
        }
        os << " \\\\\n";
    }
    os << "\\end{array}\\right)";
    return os.str();
}

}  // namespace landen
