#pragma once

/**
 * @file cli.hpp
 * @brief Commands behind the `landen` executable: generic, transform, verify.
 *
 * Each command writes to a stream and returns the process exit code:
 * 0 pass, 1 assertion failure, 2 usage or guard, 3 domain error, 4 parse error.
 */

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "elimination.hpp"
#include "jacobian.hpp"
#include "landen.hpp"
#include "serialize.hpp"
#include "symfun.hpp"

namespace landen::cli {

enum ExitCode : int { pass = 0, assertion_failed = 1, usage = 2, domain = 3, parse = 4 };

struct GenericArgs {
    int d = 2, m = 2, k = 0;
    std::string format = "text";
};

struct TransformArgs {
    std::string num, den, input;
    int m = 2, k = 0;
    std::optional<std::uint64_t> mod;
    bool raw = false;
};

struct VerifyArgs {
    std::string suite;
    int d = 2, m = 2;
    std::optional<int> k, n, l;
    std::uint64_t p = 2;
    std::size_t trials = 100;
    std::optional<std::uint64_t> seed;
    std::string mode = "symbolic";
    std::string format = "text";
};

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"composition", "resultant", "jacobian", "frobenius", "hm",
                                                "gradings",    "zeta",      "embedding", "subspaces", "conjecture-probe"};
    return names;
}

/// Maps library exceptions to exit codes, writing the message to err.
template <class Fn>
int guarded(std::ostream& err, Fn&& fn) {
    try {
        return fn();
    } catch (const parse_error& e) {
        err << "parse error: " << e.what() << "\n";
        return parse;
    } catch (const char_divides_m& e) {
        err << "domain error: " << e.what() << "\n";
        return domain;
    } catch (const not_prime& e) {
        err << "domain error: " << e.what() << "\n";
        return domain;
    } catch (const indeterminate_point& e) {
        err << "domain error: " << e.what() << "\n";
        return domain;
    } catch (const guard_exceeded& e) {
        err << "guard: " << e.what() << "\n";
        return usage;
    } catch (const invalid_argument& e) {
        err << "usage: " << e.what() << "\n";
        return usage;
    }
}

inline int cmd_generic(const GenericArgs& a, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto& P = generic_gh(a.d, a.m, a.k);
        if (a.format == "json") {
            out << pair_to_json(P).dump(2) << "\n";
        } else if (a.format == "latex") {
            out << pair_to_latex(P) << "\n";
        } else if (a.format == "text") {
            out << pair_to_text(P);
        } else {
            throw invalid_argument("unknown format " + a.format);
        }
        return static_cast<int>(pass);
    });
}

inline std::vector<std::string> split_coefficients(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        if (item.empty()) throw parse_error("empty coefficient in \"" + s + "\"");
        out.push_back(item);
    }
    return out;
}

inline json read_json_input(const std::string& path) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path);
        if (!in) throw invalid_argument("cannot read " + path);
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw parse_error(std::string("input JSON: ") + e.what());
    }
}

template <exact_field F>
json transform_json(const RatFunc<F>& phi, const TransformArgs& a) {
    auto r = transform_full(phi, a.m, a.k);
    json out{{"input", ratfunc_to_json(phi)}, {"m", a.m}, {"k", a.k}, {"result", ratfunc_to_json(r.reduced)},
             {"degree", r.degree}, {"degree_preserved", r.degree_preserved}};
    if (a.raw) out["raw"] = ratfunc_to_json(r.raw);
    return out;
}

inline int cmd_transform(const TransformArgs& a, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        AnyRatFunc phi = RatFunc<Rational>({Rational(0)}, {Rational(1)});
        if (!a.input.empty()) {
            if (!a.num.empty() || !a.den.empty()) throw invalid_argument("give --input or --num/--den, not both");
            phi = ratfunc_from_json(read_json_input(a.input));
            if (a.mod) {
                if (!std::holds_alternative<RatFunc<Rational>>(phi)) throw invalid_argument("--mod needs a field \"Q\" input");
                const auto& q = std::get<RatFunc<Rational>>(phi);
                std::vector<std::string> n, dn;
                for (const auto& c : q.num()) n.push_back(c.to_string());
                for (const auto& c : q.den()) dn.push_back(c.to_string());
                phi = make_ratfunc(n, dn, *a.mod);
            }
        } else {
            if (a.num.empty() || a.den.empty()) throw invalid_argument("transform needs --num and --den, or --input");
            phi = make_ratfunc(split_coefficients(a.num), split_coefficients(a.den), a.mod.value_or(0));
        }
        json res = std::visit([&](const auto& f) { return transform_json(f, a); }, phi);
        out << res.dump(2) << "\n";
        return static_cast<int>(pass);
    });
}

/// Collected output of one suite run.
struct SuiteResult {
    std::vector<CheckReport> reports;
    std::vector<ProbeReport> probes;
    bool passed() const {
        return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.passed(); });
    }
};

inline std::vector<int> k_values(const VerifyArgs& a, int m) {
    if (a.k) return {*a.k};
    std::vector<int> ks;
    for (int k = 0; k < m; ++k) ks.push_back(k);
    return ks;
}

inline CheckMode mode_of(const VerifyArgs& a) {
    if (a.mode == "symbolic") return CheckMode::symbolic();
    if (a.mode != "sampled") throw invalid_argument("--mode must be symbolic or sampled");
    if (!a.seed) throw invalid_argument("sampled mode needs --seed");
    return CheckMode::sampled(a.trials, *a.seed);
}

inline std::uint64_t required_seed(const VerifyArgs& a) {
    if (!a.seed) throw invalid_argument("suite " + a.suite + " samples random points and needs --seed");
    return *a.seed;
}

inline CheckReport from_subspaces(const SubspaceReport& s) {
    CheckReport rep{"subspaces", "d=" + std::to_string(s.d) + ",m=" + std::to_string(s.m) + ",k=" + std::to_string(s.k),
                    "symbolic", 1, {}, {}};
    for (const auto& r : s.refined) {
        if (!r.holds) rep.fail(r.name + " -> " + r.target + ": " + r.witness);
    }
    for (const auto& r : s.literal) {
        if (!r.holds) rep.note("literal claim " + r.name + " -> " + r.target + " fails: " + r.witness);
    }
    return rep;
}

inline SuiteResult run_suite(const VerifyArgs& a) {
    SuiteResult res;
    const int d = a.d, m = a.m;
    auto add = [&](CheckReport r) { res.reports.push_back(std::move(r)); };
    const std::string& s = a.suite;
    if (s == "composition") {
        const CheckMode mode = mode_of(a);
        std::vector<int> ns;
        if (a.n) {
            ns.push_back(*a.n);
        } else {
            for (int n = 1; n <= 3; ++n) {
                if (!mode.is_symbolic() || m * n <= 6) ns.push_back(n);
            }
        }
        for (int k : k_values(a, m)) {
            for (int n : ns) {
                if (a.l) {
                    add(compose_check(d, m, k, n, *a.l, mode));
                } else {
                    for (int l = 0; l < n; ++l) add(compose_check(d, m, k, n, l, mode));
                }
            }
        }
    } else if (s == "resultant") {
        const CheckMode mode = mode_of(a);
        for (int k : k_values(a, m)) {
            add(verify_resultant_identity(d, m, k, mode));
            add(special_pair_check(d, m, k));
        }
    } else if (s == "jacobian") {
        if (!a.k) add(check_D_eq_mA(d, m));
        for (int k : k_values(a, m)) {
            add(linear_structure_check(d, m, k));
            add(entry_grading_check(d, m, k));
            add(triangularity_check(d, m, k));
            add(det_monomial_check(d, m, k));
            add(jacobian_certificate_check(d, m, k));
        }
    } else if (s == "frobenius") {
        add(frobenius_form_check(d, a.p));
    } else if (s == "hm") {
        add(hm_suite(d, m, a.trials, required_seed(a)));
    } else if (s == "gradings") {
        for (int k : k_values(a, m)) {
            add(leading_form_check(generic_gh(d, m, k)));
            add(grading_check(generic_gh(d, m, k)));
        }
    } else if (s == "zeta") {
        for (int k : k_values(a, m)) add(zeta_independence_check(d, m, k));
    } else if (s == "embedding") {
        const CheckMode mode = mode_of(a);
        for (int k : k_values(a, m)) add(embedding_compat_check(d, m, k, mode));
    } else if (s == "subspaces") {
        for (int k : k_values(a, m)) add(from_subspaces(invariant_subspace_check(d, m, k)));
    } else if (s == "conjecture-probe") {
        for (int k : k_values(a, m)) res.probes.push_back(conjecture_probe(d, m, k));
    } else {
        throw invalid_argument("unknown suite \"" + s + "\"");
    }
    return res;
}

inline void write_text(const SuiteResult& r, const std::string& suite, std::ostream& out) {
    for (const auto& rep : r.reports) {
        out << (rep.passed() ? "PASS " : "FAIL ") << rep.identity << " " << rep.grid << " " << rep.mode
            << " trials=" << rep.trials << "\n";
        for (const auto& f : rep.failures) out << "  failure: " << f << "\n";
        for (const auto& n : rep.notes) out << "  note: " << n << "\n";
    }
    for (const auto& p : r.probes) {
        for (const auto& l : p.lines) out << "PROBE " << p.grid << " " << l.claim << ": " << l.outcome << "\n";
    }
    if (r.reports.empty()) {
        out << "suite " << suite << ": report only\n";
    } else {
        out << "suite " << suite << ": " << (r.passed() ? "pass" : "fail") << "\n";
    }
}

inline int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (a.format != "text" && a.format != "json") throw invalid_argument("--format must be text or json");
        auto r = run_suite(a);
        if (a.format == "json") {
            json reports = json::array();
            for (const auto& rep : r.reports) reports.push_back(report_to_json(rep));
            for (const auto& p : r.probes) reports.push_back(probe_to_json(p));
            out << json{{"suite", a.suite}, {"passed", r.passed()}, {"reports", reports}}.dump(2) << "\n";
        } else {
            write_text(r, a.suite, out);
        }
        if (a.suite == "conjecture-probe") return static_cast<int>(pass);
        return static_cast<int>(r.passed() ? pass : assertion_failed);
    });
}

}  // namespace landen::cli
