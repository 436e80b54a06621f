#include <gtest/gtest.h>

#include "landen/cyclotomic.hpp"
#include "landen/multipoly.hpp"
#include "landen/random.hpp"
#include "support/poly_parse.hpp"

using namespace landen;
using landen::testing::read_poly;

namespace {

const VarSet xyz({"x", "y", "z"});

MultiPoly<Integer> P(const std::string& s) { return read_poly(xyz, s); }

Integer eval(const MultiPoly<Integer>& p, const std::vector<Integer>& pt) {
    std::vector<std::optional<Integer>> vals(pt.begin(), pt.end());
    auto r = evaluate_partial(p, vals, Integer(0), [](const Integer& c) { return c; });
    return r.constant_term();
}

MultiPoly<Integer> random_poly(Rng& rng, int terms, int max_exp) {
    MultiPoly<Integer> p(xyz);
    std::uniform_int_distribution<int> e(0, max_exp);
    for (int i = 0; i < terms; ++i) {
        Monomial m(3);
        for (auto& x : m.exps) x = static_cast<std::uint32_t>(e(rng));
        p.add_term(m, random_integer(rng, -9, 9));
    }
    return p;
}

}  // namespace

TEST(MultiPoly, BasicArithmetic) {
    EXPECT_EQ(P("(z+1)*(z-1)"), P("z^2-1"));
    EXPECT_EQ(P("(x+y)^3"), P("x^3+3x^2y+3xy^2+y^3"));
    EXPECT_TRUE((P("x+y") - P("y+x")).is_zero());
    EXPECT_EQ(P("2x*3").total_degree(), 1);
}

TEST(MultiPoly, CanonicalTextIsOrderIndependent) {
    EXPECT_EQ(P("y + x^2 - 3").to_string(), P("-3 + y + x^2").to_string());
    EXPECT_EQ(P("x^2 + y - 3").to_string(), "x^2 + y - 3");
}

TEST(MultiPoly, VarSetMismatch) {
    VarSet other({"x", "y", "w"});
    EXPECT_THROW(P("x") + read_poly(other, "x"), ring_mismatch);
}

TEST(MultiPoly, CoefficientRingMismatch) {
    auto p = MultiPoly<CyclotomicInt>::constant(xyz, CyclotomicInt(3, Integer(1)));
    auto q = MultiPoly<CyclotomicInt>::constant(xyz, CyclotomicInt(4, Integer(1)));
    EXPECT_THROW(p + q, ring_mismatch);
}

TEST(MultiPoly, EvaluationIsRingHomomorphism) {
    Rng rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        auto p = random_poly(rng, 5, 3), q = random_poly(rng, 5, 3);
        std::vector<Integer> pt{random_integer(rng, -5, 5), random_integer(rng, -5, 5), random_integer(rng, -5, 5)};
        EXPECT_EQ(eval(p * q, pt), eval(p, pt) * eval(q, pt));
        EXPECT_EQ(eval(p + q, pt), eval(p, pt) + eval(q, pt));
    }
}

TEST(MultiPoly, SubstitutionIsSimultaneous) {
    std::vector<std::optional<MultiPoly<Integer>>> rep(3);
    rep[0] = P("y");
    rep[1] = P("x");
    EXPECT_EQ(substitute_all(P("x^2+2y"), rep), P("y^2+2x"));
    EXPECT_EQ(substitute(P("x*z"), "x", P("y+1")), P("yz+z"));
    EXPECT_THROW(substitute(P("x"), "q", P("y")), invalid_argument);
}

TEST(MultiPoly, Derivative) {
    EXPECT_EQ(derivative(P("x^3y+2xy^2+z"), "x"), P("3x^2y+2y^2"));
    EXPECT_TRUE(derivative(P("y"), "x").is_zero());
}

TEST(MultiPoly, CoefficientExtraction) {
    EXPECT_EQ(coefficient_of(P("x^2y+3x^2+z"), "x", 2), P("y+3"));
    EXPECT_EQ(coefficient_of(P("x^2y+3x^2+z"), "x", 0), P("z"));
}

TEST(MultiPoly, ExactDivision) {
    EXPECT_EQ(exact_divide(P("z^2-1"), P("z-1")), P("z+1"));
    EXPECT_EQ(exact_divide(P("x^3-y^3"), P("x-y")), P("x^2+xy+y^2"));
    EXPECT_THROW(exact_divide(P("x^2+1"), P("x-1")), not_divisible);
    try {
        exact_divide(P("x^2+1"), P("x-1"));
    } catch (const not_divisible& e) {
        EXPECT_FALSE(e.remainder().empty());
    }
    EXPECT_THROW(exact_divide(P("2x"), P("4")), not_divisible);
}

TEST(MultiPoly, ExactDivisionRoundTrip) {
    Rng rng(9);
    for (int trial = 0; trial < 30; ++trial) {
        auto p = random_poly(rng, 4, 2), q = random_poly(rng, 3, 2);
        if (q.is_zero()) continue;
        EXPECT_EQ(exact_divide(p * q, q), p);
    }
}

TEST(MultiPoly, ContentAndPrimitivePart) {
    auto [c, prim] = content_primitive(P("6x+4"));
    EXPECT_EQ(c, Integer(2));
    EXPECT_EQ(prim, P("3x+2"));
    EXPECT_THROW(content_primitive(P("0")), invalid_argument);
}

TEST(MultiPoly, Gradings) {
    auto g = degree_grading(P("x^2y+xz^2"), {0, 1, 2});
    EXPECT_TRUE(g.homogeneous);
    EXPECT_EQ(*g.grade, 3);
    EXPECT_FALSE(degree_grading(P("x^2+y"), {0, 1, 2}).homogeneous);
    auto bi = bidegree_grading(P("xz+yz^2"), {0, 1}, {2});
    EXPECT_FALSE(bi.homogeneous);
    auto bi2 = bidegree_grading(P("xz^2+yz^2"), {0, 1}, {2});
    EXPECT_EQ(*bi2.grade, std::make_pair(1L, 2L));
    WeightSystem w{{1, 2, 3}};
    EXPECT_EQ(*weight_grading(P("x^3+xy+z"), w).grade, 3);
}

TEST(MultiPoly, MonomialIdealNormalForm) {
    std::vector<Monomial> gens{Monomial({1, 0, 0}), Monomial({0, 2, 0})};
    EXPECT_EQ(reduce_mod_monomials(P("xy+y^2z+y+z"), gens), P("y+z"));
}

TEST(MultiPoly, CyclotomicCoefficients) {
    auto zeta = CyclotomicInt::zeta_pow(3, 1);
    auto x = MultiPoly<CyclotomicInt>::variable(xyz, "x", zeta);
    auto c = MultiPoly<CyclotomicInt>::constant(xyz, zeta);
    // (x - zeta)(x - zeta^2) = x^2 + x + 1
    auto p = (x - c) * (x - c * zeta);
    auto one = zeta.one_like();
    auto expect = x * x + x + MultiPoly<CyclotomicInt>::constant(xyz, one);
    EXPECT_EQ(p, expect);
}
