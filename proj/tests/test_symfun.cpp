#include <algorithm>

#include <gtest/gtest.h>

#include "landen/symfun.hpp"
#include "support/poly_parse.hpp"

using namespace landen;
using landen::testing::read_poly;

namespace {

std::vector<Rational> Q(std::initializer_list<long> xs) {
    std::vector<Rational> v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

ProjPoint<Integer> P(std::initializer_list<long> xs) {
    ProjPoint<Integer> p;
    for (long x : xs) p.c.emplace_back(x);
    return p;
}

}  // namespace

TEST(SigmaBar, Examples) {
    EXPECT_EQ(sigma_bar(Q({1, 2, 3})), Q({-6, 11, -6}));
    EXPECT_EQ(sigma_bar(Q({0, 0, 0, 0})), Q({0, 0, 0, 0}));
}

TEST(SigmaBar, SymbolicDegreeThree) {
    VarSet V({"x1", "x2", "x3"});
    std::vector<MultiPoly<Integer>> x;
    for (const char* n : {"x1", "x2", "x3"}) x.push_back(MultiPoly<Integer>::variable(V, n));
    auto s = sigma_bar(x);
    ASSERT_EQ(s.size(), 3u);
    EXPECT_EQ(s[0], read_poly(V, "-x1-x2-x3"));
    EXPECT_EQ(s[1], read_poly(V, "x1x2+x1x3+x2x3"));
    EXPECT_EQ(s[2], read_poly(V, "-x1x2x3"));
}

TEST(SigmaBar, PermutationInvariant) {
    Rng rng(8);
    for (int trial = 0; trial < 30; ++trial) {
        auto u = random_tuple(rng, 4);
        auto v = u;
        std::shuffle(v.begin(), v.end(), rng);
        EXPECT_EQ(sigma_bar(u), sigma_bar(v));
    }
}

TEST(HmProjective, Examples) {
    EXPECT_EQ(h_m_projective(Q({1, 1, 1}), 2), P({1, 1, 1}));
    EXPECT_EQ(h_m_projective(Q({0, 0, 1}), 2), P({0, 0, 1}));
    EXPECT_EQ(h_m_projective(Q({1, -3, 2}), 2), P({1, -5, 4}));
    EXPECT_THROW(h_m_projective(Q({0, 0, 0}), 2), invalid_argument);
    Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        auto b = random_tuple(rng, 4);
        if (all_zero(b)) continue;
        EXPECT_EQ(h_m_projective(b, 1), normalize_proj(b));
    }
}

// H_0 = (-1)^((m+1)d) b_0^m: the chart b_0 = 1 needs only the sign.
TEST(HmProjective, LeadingCoordinate) {
    for (int d = 1; d <= 4; ++d) {
        const VarSet& V = landen_vars(d);
        for (int m = 1; m <= 5; ++m) {
            auto h0 = coefficient_of(generic_gh(d, m, 0).H, 0, static_cast<std::uint32_t>(d));
            auto expect = MultiPoly<Integer>::variable(V, "b0").pow(static_cast<unsigned>(m)) *
                          Integer(sign_power(static_cast<long>(m + 1) * d));
            EXPECT_EQ(h0, expect) << d << m;
        }
    }
}

TEST(HmAffine, Examples) {
    EXPECT_EQ(h_m_affine(Q({-3, 2}), 2), Q({-5, 4}));
    EXPECT_EQ(h_m_affine(Q({0, 0, 0}), 3), Q({0, 0, 0}));
    EXPECT_EQ(h_m_affine(Q({4, -1, 7}), 1), Q({4, -1, 7}));
}

TEST(Conjugacy, Examples) {
    EXPECT_TRUE(conjugacy_check(Q({1, 2}), 2));
    EXPECT_EQ(sigma_bar(power_map(Q({1, 2}), 2)), Q({-5, 4}));
    EXPECT_TRUE(conjugacy_check(Q({0, 0, 0}), 4));
}

TEST(Conjugacy, RandomGrid) {
    for (int d = 1; d <= 4; ++d) {
        for (int m = 1; m <= 4; ++m) {
            auto r = conjugacy_suite(d, m, 100, 21);
            EXPECT_TRUE(r.passed()) << r.grid << ": " << (r.failures.empty() ? "" : r.failures[0]);
        }
    }
}

TEST(Strata, Examples) {
    auto h = h_m_coordinates(Q({0, 3, -2}), 2);
    EXPECT_TRUE(h[0].is_zero());
    EXPECT_EQ(h_m_projective(Q({0, 0, 0, 5}), 3), P({0, 0, 0, 1}));
    for (int d = 1; d <= 3; ++d) {
        for (int m = 1; m <= 4; ++m) {
            auto r = strata_restriction_check(d, m, 20, 5);
            EXPECT_TRUE(r.passed()) << r.grid << ": " << (r.failures.empty() ? "" : r.failures[0]);
        }
    }
}

TEST(ZeroLocus, Grid) {
    for (int d = 1; d <= 3; ++d) {
        for (int m = 1; m <= 4; ++m) {
            auto r = zero_locus_check(d, m, 1000, 9);
            EXPECT_TRUE(r.passed()) << r.grid << ": " << (r.failures.empty() ? "" : r.failures[0]);
        }
    }
}

TEST(Semigroup, Grid) {
    for (int d = 1; d <= 3; ++d) {
        for (int m = 1; m <= 3; ++m) {
            for (int n = 1; n <= 3; ++n) {
                auto r = semigroup_check(d, m, n, 20, 13);
                EXPECT_TRUE(r.passed()) << r.grid << ": " << (r.failures.empty() ? "" : r.failures[0]);
            }
        }
    }
}

TEST(HmSuite, Passes) {
    auto r = hm_suite(2, 3, 10, 1);
    EXPECT_TRUE(r.passed());
    EXPECT_GT(r.trials, 0u);
}
