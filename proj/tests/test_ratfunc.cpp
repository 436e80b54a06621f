#include <gtest/gtest.h>

#include "landen/random.hpp"
#include "landen/ratfunc.hpp"

using namespace landen;

namespace {

std::vector<Rational> Q(std::initializer_list<long> xs) {
    std::vector<Rational> v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

RatFunc<Rational> R(std::initializer_list<long> num, std::initializer_list<long> den) {
    return RatFunc<Rational>(Q(num), Q(den));
}

RatFunc<Rational> random_ratfunc(Rng& rng, int d) {
    for (;;) {
        auto num = random_rationals(rng, static_cast<std::size_t>(d + 1), 5);
        auto den = random_rationals(rng, static_cast<std::size_t>(d + 1), 5);
        if (den.back().is_zero()) continue;  // keep phi(0) finite for the inverse test
        if (std::all_of(den.begin(), den.end(), [](const Rational& x) { return x.is_zero(); })) continue;
        return RatFunc<Rational>(num, den);
    }
}

}  // namespace

TEST(RatFunc, Validation) {
    EXPECT_THROW(R({1, 2}, {0, 0}), invalid_argument);
    EXPECT_THROW(R({1, 2}, {1}), invalid_argument);
    std::vector<PrimeField> n{PrimeField::one(5)}, d{PrimeField::one(7)};
    EXPECT_THROW(RatFunc<PrimeField>(n, d), ring_mismatch);
}

TEST(RatFunc, TrueDegree) {
    EXPECT_EQ(true_degree(R({1, 2, 1}, {0, 1, 1})), 1);
    EXPECT_EQ(true_degree(R({1, 0, 1}, {1, 1, 1})), 2);
    EXPECT_EQ(true_degree(R({3}, {2})), 0);
    EXPECT_EQ(true_degree(R({0, 0, 0}, {1, 1, 1})), 0);
}

TEST(RatFunc, ReducedFormIsSameFunction) {
    auto phi = R({1, 2, 1}, {0, 2, 2});
    auto red = phi.reduced();
    EXPECT_EQ(red.d(), 1);
    const Rational half(Integer(1), Integer(2));
    EXPECT_EQ(red.num(), (std::vector<Rational>{half, half}));
    EXPECT_EQ(red.den(), Q({0, 1}));
    EXPECT_TRUE(same_function(phi, red));
}

TEST(Laurent, GeometricSeries) {
    auto s = laurent_expand(R({0, 1}, {-1, 1}), 5);
    EXPECT_EQ(s.start, 0);
    EXPECT_EQ(s.coeffs, Q({1, 1, 1, 1, 1}));
}

TEST(Laurent, Monomial) {
    auto s = laurent_expand(R({1, 0, 0, 0}, {0, 0, 0, 1}), 1);
    EXPECT_EQ(s.start, 3);
    EXPECT_EQ(s.coeffs, Q({1}));
}

TEST(Laurent, PoleAtZero) {
    // (z + 1)/z^2 = z^-2 + z^-1
    auto s = laurent_expand(R({0, 1, 1}, {1, 0, 0}), 4);
    EXPECT_EQ(s.start, -2);
    EXPECT_EQ(s.coeffs, Q({1, 1, 0, 0}));
}

// Independent oracle: c satisfies den * c = num coefficientwise, checked by
// multiplying the truncated series back.
TEST(Laurent, LongDivisionOracle) {
    auto phi = R({1, 0, 1}, {1, 1, 1});
    auto s = laurent_expand(phi, 6);
    EXPECT_EQ(s.start, 0);
    // (1 + z^2)/(1 + z + z^2) = 1 - z + z^2 ... by hand: 1, -1, 1, 0, -1, 1
    EXPECT_EQ(s.coeffs, Q({1, -1, 1, 0, -1, 1}));
    std::vector<Rational> den{1, 1, 1};
    for (std::size_t n = 0; n < 6; ++n) {
        Rational acc(0);
        for (std::size_t j = 0; j <= std::min<std::size_t>(n, 2); ++j) acc += den[j] * s.coeffs[n - j];
        EXPECT_EQ(acc, n == 0 || n == 2 ? Rational(1) : Rational(0));
    }
}

TEST(Laurent, AdditivityAndInverse) {
    Rng rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        const int d = 1 + trial % 3;
        auto phi = random_ratfunc(rng, d), psi = random_ratfunc(rng, d);
        // phi + psi with formal degree 2d
        auto n = phi.numerator() * psi.denominator() + psi.numerator() * phi.denominator();
        auto dn = phi.denominator() * psi.denominator();
        auto sum = RatFunc<Rational>::from_polys(n, dn, static_cast<std::size_t>(2 * d));
        const std::size_t N = 12;
        auto lhs = laurent_expand(sum, N + 10);
        auto rhs = laurent_expand(phi, N + 10) + laurent_expand(psi, N + 10);
        EXPECT_TRUE(agree_below(lhs, rhs, std::min(lhs.end(), rhs.end())));

        if (phi.num().back().is_zero()) continue;  // need phi(0) != 0
        RatFunc<Rational> inv(phi.den(), phi.num());
        auto prod = laurent_expand(phi, N) * laurent_expand(inv, N);
        ASSERT_EQ(prod.start, 0);
        EXPECT_TRUE(prod.coeffs[0].is_one());
        for (std::size_t i = 1; i < N; ++i) EXPECT_TRUE(prod.coeffs[i].is_zero());
    }
}

TEST(ProjPoint, NormalizeExamples) {
    EXPECT_EQ(normalize_proj(std::vector<Integer>{2, 4, 6}).c, (std::vector<Integer>{1, 2, 3}));
    EXPECT_EQ(normalize_proj(std::vector<Integer>{-1, 0, 2}).c, (std::vector<Integer>{1, 0, -2}));
    EXPECT_EQ(normalize_proj(std::vector<Integer>{0, 0, 5}).c, (std::vector<Integer>{0, 0, 1}));
    EXPECT_THROW(normalize_proj(std::vector<Integer>{0, 0}), invalid_argument);
    EXPECT_EQ(normalize_proj(std::vector<Rational>{Rational(Integer(1), Integer(2)), Rational(Integer(-1), Integer(3))}).c,
              (std::vector<Integer>{3, -2}));
}

TEST(ProjPoint, IdempotentAndScaleInvariant) {
    Rng rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Integer> c;
        for (int i = 0; i < 5; ++i) c.push_back(random_integer(rng, -30, 30));
        if (std::all_of(c.begin(), c.end(), [](const Integer& x) { return x.is_zero(); })) continue;
        auto p = normalize_proj(c);
        EXPECT_EQ(normalize_proj(p.c), p);
        Integer lambda = random_nonzero_integer(rng, 50);
        std::vector<Integer> scaled;
        for (auto& x : c) scaled.push_back(x * lambda);
        EXPECT_EQ(normalize_proj(scaled), p);
    }
}

TEST(ProjPoint, PrimeField) {
    std::vector<PrimeField> c{PrimeField::zero(7), PrimeField(Integer(3), 7), PrimeField(Integer(5), 7)};
    auto p = normalize_proj(c);
    EXPECT_TRUE(p.c[1].is_one());
    EXPECT_EQ(p.c[2].value(), 4u);  // 5/3 = 5*5 = 25 = 4 mod 7
}
