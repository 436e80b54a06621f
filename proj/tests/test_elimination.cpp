#include <chrono>

#include <gtest/gtest.h>

#include "landen/elimination.hpp"
#include "support/poly_parse.hpp"

using namespace landen;
using landen::testing::read_poly;

namespace {

const VarSet& V2 = landen_vars(2);

std::vector<Rational> Q(std::initializer_list<long> xs) {
    std::vector<Rational> v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

std::vector<MultiPoly<Integer>> polys(const VarSet& V, std::initializer_list<const char*> xs) {
    std::vector<MultiPoly<Integer>> v;
    for (auto x : xs) v.push_back(read_poly(V, x));
    return v;
}

}  // namespace

TEST(Resultant, SmallExamples) {
    EXPECT_EQ(sylvester_resultant(polys(V2, {"a0", "a1"}), polys(V2, {"b0", "b1"})), read_poly(V2, "a0b1-a1b0"));
    EXPECT_EQ(sylvester_resultant(Q({1, -1}), Q({1, -2})), Rational(-1));
    EXPECT_THROW(sylvester_resultant(Q({1, -1}), Q({1, -2}), ResultantConvention{2, 1}), invalid_argument);
}

// Classical quadratic resultant, expanded by hand from the root formula.
TEST(Resultant, QuadraticMatchesClassicalFormula) {
    auto res = sylvester_resultant(coefficient_variables(2, 'a'), coefficient_variables(2, 'b'));
    auto classical = read_poly(V2, "(a0b2-a2b0)^2 - (a0b1-a1b0)(a1b2-a2b1)");
    EXPECT_EQ(res, classical);
}

TEST(Resultant, BareissMatchesLaplace) {
    for (int d = 1; d <= 3; ++d) {
        auto s = sylvester_matrix(z_coefficients(generic_gh(d, 2, 1).G, d), z_coefficients(generic_gh(d, 2, 1).H, d));
        EXPECT_EQ(det_bareiss(s), det_laplace(s)) << d;
    }
}

// Oracle: Res(f, g) = f0^p g0^n prod (r_i - s_j) for f, g with rational roots.
TEST(Resultant, MultiplicativeAndRootFormula) {
    Rng rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Rational> rf = random_rationals(rng, 2, 5), rg = random_rationals(rng, 3, 5), rh = random_rationals(rng, 1, 5);
        Rational cf = random_nonzero_rational(rng, 4), cg = random_nonzero_rational(rng, 4), ch = random_nonzero_rational(rng, 4);
        auto f = poly_from_roots(cf, rf), g = poly_from_roots(cg, rg), h = poly_from_roots(ch, rh);
        Rational expect = pow(cf, 3) * pow(cg, 2);
        for (auto& r : rf) {
            for (auto& s : rg) expect *= r - s;
        }
        EXPECT_EQ(sylvester_resultant(f, g), expect);
        // Res(f h, g) = Res(f, g) Res(h, g)
        auto fh = poly_from_roots(cf * ch, std::vector<Rational>{rf[0], rf[1], rh[0]});
        EXPECT_EQ(sylvester_resultant(fh, g), sylvester_resultant(f, g) * sylvester_resultant(h, g));
    }
}

TEST(Discriminant, Examples) {
    EXPECT_EQ(discriminant(coefficient_variables(2, 'b')), read_poly(V2, "b1^2-4b0b2"));
    EXPECT_EQ(discriminant(z_coefficients(generic_gh(2, 2, 0).H, 2)), read_poly(V2, "b1^2(-4b2b0+b1^2)"));
    EXPECT_EQ(discriminant(Q({3, 5})), Rational(1));
    EXPECT_THROW(discriminant(Q({0, 1, 1})), not_divisible);
}

// Oracle: Disc = c^(2n-2) prod_{i<j} (r_i - r_j)^2.
TEST(Discriminant, RootFormula) {
    Rng rng(4);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(trial % 3);
        auto roots = random_rationals(rng, n, 6);
        Rational c = random_nonzero_rational(rng, 3);
        Rational expect = pow(c, static_cast<unsigned long>(2 * n - 2));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) expect *= (roots[i] - roots[j]) * (roots[i] - roots[j]);
        }
        EXPECT_EQ(discriminant(poly_from_roots(c, roots)), expect);
    }
}

TEST(DiscRatio, Examples) {
    EXPECT_EQ(disc_ratio(2, 2), read_poly(V2, "b1^2"));
    for (int m = 1; m <= 4; ++m) EXPECT_TRUE(disc_ratio(1, m).is_constant());
    // d = 2, m = 3 recomputed independently from both discriminants.
    auto dh = discriminant(z_coefficients(generic_gh(2, 3, 0).H, 2));
    EXPECT_EQ(disc_ratio(2, 3) * discriminant(coefficient_variables(2, 'b')), dh);
}

TEST(ResultantIdentity, SymbolicSmall) {
    for (int m = 1; m <= 3; ++m) {
        for (int k = 0; k < m; ++k) {
            auto r = verify_resultant_identity(2, m, k, CheckMode::symbolic());
            EXPECT_TRUE(r.passed()) << r.grid << (r.failures.empty() ? "" : r.failures[0]);
        }
    }
    EXPECT_THROW(verify_resultant_identity(3, 2, 0, CheckMode::symbolic()), guard_exceeded);
}

// Res(G, H) has b-degree d(2m-1); the literal right-hand side has d(2m-1)-k.
TEST(ResultantIdentity, LiteralFormOffByB0PowerK) {
    for (int m = 1; m <= 3; ++m) {
        for (int k = 0; k < m; ++k) {
            const auto& P = generic_gh(2, m, k);
            auto lhs = sylvester_resultant(z_coefficients(P.G, 2), z_coefficients(P.H, 2));
            auto literal = resultant_identity_rhs(2, m, k, ResultantForm::literal);
            auto b0 = MultiPoly<Integer>::variable(V2, "b0");
            EXPECT_EQ(lhs, literal * b0.pow(static_cast<unsigned>(k))) << m << k;
            EXPECT_EQ(verify_resultant_identity(2, m, k, CheckMode::symbolic(), ResultantForm::literal).passed(), k == 0);
            const std::vector<std::size_t> bvars{b_index(2, 0), b_index(2, 1), b_index(2, 2)};
            EXPECT_EQ(degree_grading(lhs, bvars).grade, std::optional<long>(2 * (2 * m - 1)));
            EXPECT_EQ(degree_grading(literal, bvars).grade, std::optional<long>(2 * (2 * m - 1) - k));
        }
    }
}

TEST(ResultantIdentity, SpecialPair) {
    EXPECT_EQ(special_pair_resultant(2, 2, 0), Rational(4));
    for (int d = 1; d <= 3; ++d) {
        for (int m = 1; m <= 4; ++m) {
            for (int k = 0; k < m; ++k) {
                auto r = special_pair_check(d, m, k);
                EXPECT_TRUE(r.passed()) << r.grid << ": " << (r.failures.empty() ? "" : r.failures[0]);
            }
        }
    }
}

TEST(ResultantIdentity, SampledDegreeThree) {
    for (int k = 0; k < 4; ++k) {
        auto r = verify_resultant_identity(3, 4, k, CheckMode::sampled(10, 17));
        EXPECT_TRUE(r.passed()) << r.grid << ": " << (r.failures.empty() ? "" : r.failures[0]);
    }
}

TEST(DiscRatio, DivisibilityGrid) {
    for (int d = 1; d <= 3; ++d) {
        for (int m = 1; m <= 4; ++m) EXPECT_NO_THROW(disc_ratio(d, m)) << d << m;
    }
}

// Degeneracy criterion on constructed root tuples: vanishing exactly for a shared zero
// root or distinct roots with equal m-th powers.
TEST(DiscRatio, VanishingCriterion) {
    auto vanishes = [](const std::vector<Rational>& roots, int m) {
        const int d = static_cast<int>(roots.size());
        return evaluate_in_b(disc_ratio(d, m), d, poly_from_roots(Rational(2), roots)).is_zero();
    };
    for (int m = 2; m <= 4; ++m) {
        EXPECT_TRUE(vanishes(Q({0, 0}), m));
        EXPECT_TRUE(vanishes(Q({0, 0, 3}), m));
        EXPECT_FALSE(vanishes(Q({2, 2}), m));
        EXPECT_FALSE(vanishes(Q({1, 2, 3}), m));
        EXPECT_FALSE(vanishes(Q({0, 5}), m));
        EXPECT_EQ(vanishes(Q({1, -1}), m), m % 2 == 0);
        EXPECT_EQ(vanishes(Q({3, -3, 1}), m), m % 2 == 0);
    }
}

TEST(HFactorization, Examples) {
    EXPECT_TRUE(h_factorization_check(Rational(1), Q({1, 2}), 2));
    auto b = poly_from_roots(Rational(1), Q({1, 2}));
    EXPECT_EQ(b, Q({1, -3, 2}));
    auto c = evaluate_coordinates(generic_gh(2, 2, 0), Q({0, 0, 0}), b);
    EXPECT_EQ(std::vector<Rational>(c.begin() + 3, c.end()), Q({1, -5, 4}));
    for (int m = 1; m <= 4; ++m) EXPECT_TRUE(h_factorization_check(Rational(3), Q({0}), m));
    EXPECT_TRUE(h_factorization_check(Rational(1), Q({1, -1}), 2));
}

TEST(Nondegenerate, Examples) {
    EXPECT_TRUE(is_m_nondegenerate(Q({1, 1, 1}), 2));
    EXPECT_FALSE(is_m_nondegenerate(Q({1, 0, 1}), 2));
    EXPECT_FALSE(is_m_nondegenerate(Q({1, 0, 0}), 2));
}

TEST(DegreePreservation, Examples) {
    RatFunc<Rational> z2(Q({1, 0, 0}), Q({0, 0, 1}));
    EXPECT_FALSE(degree_preservation_check(z2, 2, 0));
    RatFunc<Rational> phi(Q({2, 1, 3}), Q({1, 1, 1}));
    ASSERT_TRUE(is_m_nondegenerate(phi.den(), 2));
    EXPECT_TRUE(degree_preservation_check(phi, 2, 0));
    for (int trial = 0; trial < 20; ++trial) {
        Rng rng = trial_rng(2, static_cast<std::uint64_t>(trial));
        auto psi = random_ratfunc(rng, 2);
        if (true_degree(psi) == 2) {
            EXPECT_TRUE(degree_preservation_check(psi, 1, 0));
        }
        for (int m = 2; m <= 3; ++m) {
            for (int k = 0; k < m; ++k) EXPECT_NO_THROW(degree_preservation_check(psi, m, k));
        }
    }
}

TEST(DiscRatio, TimingDegreeFour) {
    auto start = std::chrono::steady_clock::now();
    for (int m = 2; m <= 4; ++m) EXPECT_FALSE(disc_ratio(4, m).is_zero());
    auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << "disc_ratio(4, 2..4): " << secs << " s\n";
}
