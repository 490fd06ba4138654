#include <gtest/gtest.h>

#include <random>

#include "nokit/charts.hpp"
#include "nokit/field.hpp"
#include "nokit/laurent.hpp"

using namespace nokit;

namespace {

// variables of the P(3,5) chart in canonical order
VarSpace chart_vars() { return partition_varspace(all_partitions(GridShape(3, 5))); }

Poly var(const VarSpace& vs, const std::string& name) { return Poly::variable(vs.size(), *vs.index_of(name)); }

Poly random_poly(std::mt19937& rng, std::size_t nv) {
    std::uniform_int_distribution<int> ex(-2, 2), co(-3, 3), cnt(0, 4);
    Poly p(nv);
    int m = cnt(rng);
    for (int t = 0; t < m; ++t) {
        Exponent e(nv);
        for (auto& x : e) x = ex(rng);
        p.add_term(e, co(rng));
    }
    return p;
}

}  // namespace

TEST(Laurent, RingBasics) {
    Poly x = Poly::variable(1, 0);
    Poly one = Poly::constant(1, 1);
    EXPECT_EQ((one + x) * (one - x), one - x.pow(2));
    EXPECT_EQ(x + Poly(1), x);
    EXPECT_EQ(x * x.monomial_inverse(), one);
    EXPECT_TRUE((x - x).is_zero());
}

TEST(Laurent, RingAxiomsRandom) {
    std::mt19937 rng(11);
    for (int t = 0; t < 50; ++t) {
        Poly a = random_poly(rng, 3), b = random_poly(rng, 3), c = random_poly(rng, 3);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a + b, b + a);
    }
}

TEST(Laurent, ProductMatchesKnownFlowPolynomial) {
    VarSpace vs = chart_vars();
    Poly m = var(vs, "3") * var(vs, "2,2") * var(vs, "3,3");
    Poly p = m * (Poly::constant(vs.size(), 1) + var(vs, "2"));
    EXPECT_EQ(p.num_terms(), 2u);
    auto lo = strongly_min_term(p);
    ASSERT_TRUE(lo.has_value());
    EXPECT_EQ(Poly::monomial(lo->exps), m);
}

TEST(Laurent, PrintParseRoundTrip) {
    VarSpace vs = chart_vars();
    Poly p = var(vs, "3").pow(2) * var(vs, "1,1").monomial_inverse() - mpz_class(7) * var(vs, "2,1") + Poly::constant(vs.size(), 4);
    std::string s = p.str(vs);
    EXPECT_EQ(Poly::parse(s, vs), p);
    EXPECT_EQ(Poly::parse("0", vs), Poly(vs.size()));
    EXPECT_THROW(Poly::parse("+1 * (9)^{1}", vs), std::invalid_argument);
}

TEST(Laurent, EvaluateModP) {
    FpRng rng(3);
    Poly five = Poly::constant(2, 5);
    std::vector<Fp> pt = {rng.nonzero(), rng.nonzero()};
    EXPECT_EQ(eval_mod_p(five, pt), Fp(5));
    Poly x = Poly::variable(2, 0);
    EXPECT_EQ(eval_mod_p(x * x.monomial_inverse(), pt), Fp(1));
    std::vector<Fp> zero = {Fp(0), Fp(1)};
    EXPECT_THROW(eval_mod_p(x.monomial_inverse(), zero), std::domain_error);
}

TEST(Laurent, StronglyExtremalTerms) {
    Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
    auto a = strongly_min_term(x), b = strongly_max_term(x);
    ASSERT_TRUE(a && b);
    EXPECT_EQ(a->exps, b->exps);
    EXPECT_FALSE(strongly_min_term(x + y).has_value());
    EXPECT_FALSE(strongly_max_term(x + y).has_value());
    EXPECT_THROW(strongly_min_term(Poly(2)), std::domain_error);
}

TEST(Tropical, ThreeVariableExample) {
    // x1^-1 x3^2 + 5 x2 + x1 x2^-3 x3
    Poly p(3);
    p.add_term({-1, 0, 2}, 1);
    p.add_term({0, 1, 0}, 5);
    p.add_term({1, -3, 1}, 1);
    TropForm t = tropicalize(p);
    ASSERT_EQ(t.forms.size(), 3u);
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> d(-9, 9);
    for (int it = 0; it < 30; ++it) {
        std::vector<mpq_class> y = {mpq_class(d(rng), 3), mpq_class(d(rng), 2), mpq_class(d(rng))};
        for (auto& v : y) v.canonicalize();
        mpq_class want = std::min({mpq_class(2 * y[2] - y[0]), y[1], mpq_class(y[0] - 3 * y[1] + y[2])});
        EXPECT_EQ(t(y), want);
    }
}

TEST(Tropical, MonomialAndRSlot) {
    Poly m = Poly::monomial({2, -1});
    TropForm t = tropicalize(m);
    ASSERT_EQ(t.forms.size(), 1u);
    EXPECT_EQ(t.forms[0].a, (std::vector<mpq_class>{2, -1}));
    // q p_(2) / p_(3,3) with q in the last slot
    Poly w = Poly::monomial({1, -1, 1});
    TropForm tw = tropicalize(w, std::size_t{2});
    ASSERT_EQ(tw.forms.size(), 1u);
    EXPECT_EQ(tw.forms[0].rcoef, 1);
    EXPECT_EQ(tw.forms[0].a, (std::vector<mpq_class>{1, -1}));
    Poly neg(1);
    neg.add_term({1}, -1);
    EXPECT_THROW(tropicalize(neg), std::domain_error);
}

TEST(Tropical, ProductIsSumAndSumIsMin) {
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> ex(-2, 3), co(1, 4), d(-6, 6);
    for (int t = 0; t < 30; ++t) {
        Poly a(3), b(3);
        for (int i = 0; i < 3; ++i) {
            a.add_term({ex(rng), ex(rng), ex(rng)}, co(rng));
            b.add_term({ex(rng), ex(rng), ex(rng)}, co(rng));
        }
        std::vector<mpq_class> y = {mpq_class(d(rng), 2), mpq_class(d(rng)), mpq_class(d(rng), 3)};
        for (auto& v : y) v.canonicalize();
        EXPECT_EQ(tropicalize(a * b)(y), tropicalize(a)(y) + tropicalize(b)(y));
        EXPECT_EQ(tropicalize(a + b)(y), std::min(tropicalize(a)(y), tropicalize(b)(y)));
    }
}
