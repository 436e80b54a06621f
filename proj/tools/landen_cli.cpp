#include <iostream>

#include <CLI11.hpp>

#include "landen/cli.hpp"

using namespace landen::cli;

int main(int argc, char** argv) {
    CLI::App app{"Exact generalized Landen transforms and their identities.\n"
                 "Coefficients are given in descending order: the first multiplies z^d."};
    app.require_subcommand(1);

    GenericArgs g;
    auto* generic = app.add_subcommand("generic", "Emit the universal pair G, H over Z");
    generic->add_option("--d", g.d, "Degree")->required();
    generic->add_option("--m", g.m, "Order m")->required();
    generic->add_option("--k", g.k, "Residue 0 <= k < m")->required();
    generic->add_option("--format", g.format, "text | json | latex")->check(CLI::IsMember({"text", "json", "latex"}));

    TransformArgs t;
    std::uint64_t mod = 0;
    auto* transform = app.add_subcommand("transform", "Apply the transform to a concrete rational function");
    transform->add_option("--num", t.num, "Numerator coefficients, comma separated, descending");
    transform->add_option("--den", t.den, "Denominator coefficients, comma separated, descending");
    transform->add_option("--input", t.input, "RatFunc JSON file, or - for stdin");
    transform->add_option("--m", t.m, "Order m")->required();
    transform->add_option("--k", t.k, "Residue 0 <= k < m")->required();
    auto* mod_opt = transform->add_option("--mod", mod, "Work over F_p");
    transform->add_flag("--raw", t.raw, "Also print the unreduced G/H");

    VerifyArgs v;
    int k = 0, n = 0, l = 0;
    std::uint64_t seed = 0;
    auto* verify = app.add_subcommand("verify", "Run a named verification suite");
    verify->add_option("--suite", v.suite, "Suite name")->required();
    verify->add_option("--d", v.d, "Degree");
    verify->add_option("--m", v.m, "Order m");
    auto* k_opt = verify->add_option("--k", k, "Residue (default: all)");
    auto* n_opt = verify->add_option("--n", n, "Inner order for composition (default: 1..3)");
    auto* l_opt = verify->add_option("--l", l, "Inner residue for composition (default: all)");
    verify->add_option("--p", v.p, "Prime for the frobenius suite");
    verify->add_option("--trials", v.trials, "Random trials per cell");
    auto* seed_opt = verify->add_option("--seed", seed, "Seed, required whenever points are sampled");
    verify->add_option("--mode", v.mode, "symbolic | sampled")->check(CLI::IsMember({"symbolic", "sampled"}));
    verify->add_option("--format", v.format, "text | json")->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : ExitCode::usage;
    }

    if (*generic) return cmd_generic(g, std::cout, std::cerr);
    if (*transform) {
        if (*mod_opt) t.mod = mod;
        return cmd_transform(t, std::cout, std::cerr);
    }
    if (*k_opt) v.k = k;
    if (*n_opt) v.n = n;
    if (*l_opt) v.l = l;
    if (*seed_opt) v.seed = seed;
    return cmd_verify(v, std::cout, std::cerr);
}
