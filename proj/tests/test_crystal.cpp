#include <random>

#include <gtest/gtest.h>

#include "hwg/crystal.hpp"
#include "support.hpp"

using namespace hwg;

namespace {

const Rational half(1, 2);

RationalVector random_vector(std::mt19937_64 &rng, int n)
{
    std::uniform_int_distribution<int> num(-20, 20), den(1, 7);
    RationalVector v(n);
    for (auto &x : v) x = Rational(num(rng), den(rng));
    return v;
}

} // namespace

TEST(AffineIsometry, GroupLaws)
{
    const auto [a, b] = gamma3_generators();
    EXPECT_TRUE(compose(a, inv(a)).is_identity());
    EXPECT_TRUE(compose(inv(b), b).is_identity());
    const auto t = compose(AffineIsometry::translation({1, half, 0}), AffineIsometry::translation({-2, half, 3}));
    EXPECT_EQ(t, AffineIsometry::translation({-1, 1, 3}));
    EXPECT_EQ(compose(a, a), AffineIsometry::translation({1, 0, 0}));
    EXPECT_EQ(power(a, -2), AffineIsometry::translation({-1, 0, 0}));
    EXPECT_EQ(compose(compose(a, b), a), compose(a, compose(b, a)));
}

TEST(AffineIsometry, Validation)
{
    EXPECT_THROW(AffineIsometry(2, {1, 1, 0, 1}, {0, 0}), std::invalid_argument);
    EXPECT_THROW(AffineIsometry(2, {2, 0, 0, 1}, {0, 0}), std::invalid_argument);
    EXPECT_THROW(AffineIsometry(2, {1, 0, 0, 1}, {0}), std::invalid_argument);
    EXPECT_THROW(compose(AffineIsometry::identity(2), AffineIsometry::identity(3)), std::invalid_argument);
    const AffineIsometry swap(2, {0, 1, 1, 0}, {0, 0});
    EXPECT_EQ(swap.det(), -1);
    EXPECT_EQ(AffineIsometry(2, {0, -1, 1, 0}, {0, 0}).det(), 1);
}

TEST(Gamma3, Generators)
{
    const auto [a, b] = gamma3_generators();
    EXPECT_EQ(a.translation_part(), (RationalVector{half, half, 0}));
    EXPECT_EQ(a.linear_part(), (std::vector<int>{1, 0, 0, 0, -1, 0, 0, 0, -1}));
    EXPECT_EQ(b.linear_part(), (std::vector<int>{-1, 0, 0, 0, 1, 0, 0, 0, -1}));
    EXPECT_EQ(b.translation_part(), (RationalVector{0, half, half}));
    EXPECT_EQ(a.det(), 1);
    EXPECT_EQ(b.det(), 1);
}

TEST(Gamma3, Relators)
{
    const auto v = verify_hom_g2_gamma3();
    EXPECT_TRUE(v.pass);
    EXPECT_TRUE(v.relator_xy.is_identity());
    EXPECT_TRUE(v.relator_yx.is_identity());
    EXPECT_EQ(v.a_squared, AffineIsometry::translation({1, 0, 0}));
    EXPECT_EQ(v.b_squared, AffineIsometry::translation({0, 1, 0}));
}

TEST(GammaN, Generators)
{
    EXPECT_EQ(gamma_n_generator(3, 1), gamma3_generators().first);
    EXPECT_THROW(gamma_n_generator(4, 1), std::invalid_argument);
    EXPECT_THROW(gamma_n_generator(5, 5), std::out_of_range);
    for (int n : {3, 5, 7})
        for (int i = 1; i < n; ++i) EXPECT_EQ(gamma_n_generator(n, i).det(), 1);
    EXPECT_EQ(holonomy_order(3), 4u);
    EXPECT_EQ(holonomy_order(5), 16u);
}

TEST(Model, EvaluationIsHomomorphism)
{
    std::mt19937_64 rng(1);
    const auto g3 = gamma3_model();
    const auto r3 = rn_model(3);
    for (int k = 0; k < 300; ++k) {
        const auto a = hwg::testing::random_element(rng, 2), b = hwg::testing::random_element(rng, 2);
        EXPECT_EQ(g3.eval(multiply(a, b)), compose(g3.eval(a), g3.eval(b)));
        const auto c = hwg::testing::random_element(rng, 3), d = hwg::testing::random_element(rng, 3);
        EXPECT_EQ(r3.eval(multiply(c, d)), compose(r3.eval(c), r3.eval(d)));
    }
}

TEST(Model, WordAndNormalFormAgree)
{
    std::mt19937_64 rng(2);
    const auto g3 = gamma3_model();
    for (int k = 0; k < 300; ++k) {
        const auto w = hwg::testing::random_word(rng, 2, 10);
        EXPECT_EQ(g3.eval(w), g3.eval(evaluate(2, w)));
    }
}

TEST(RnAction, Examples)
{
    EXPECT_EQ(rn_action(GroupElement::generator(2, 1), {0, 0}), (RationalVector{half, 0}));
    std::mt19937_64 rng(3);
    for (int n = 2; n <= 4; ++n)
        for (int k = 0; k < 30; ++k) {
            const auto v = random_vector(rng, n);
            for (int i = 1; i <= n; ++i) {
                const auto sq = rn_model(n).eval(std::vector<Syllable>{{i, 2}}).apply(v);
                auto expect = v;
                expect[i - 1] += 1;
                EXPECT_EQ(sq, expect);
                for (int j = 1; j <= n; ++j)
                    if (i != j) EXPECT_EQ(rn_model(n).eval(relator(i, j)).apply(v), v);
            }
        }
    EXPECT_THROW(rn_action(GroupElement::identity(2), {0, 0, 0}), std::invalid_argument);
}

TEST(FixedPoints, Examples)
{
    EXPECT_FALSE(fixed_point(AffineIsometry::translation({1, 0})).has_value());
    EXPECT_FALSE(fixed_point(rn_model(2).image(1)).has_value());
    const auto p = fixed_point(AffineIsometry::diagonal({-1, -1}, {half, 0}));
    ASSERT_TRUE(p.has_value());
    EXPECT_EQ(*p, (RationalVector{Rational(1, 4), 0}));
}

TEST(FixedPoints, Gamma3HasNone)
{
    const auto rep = fixed_point_probe(gamma3_model(), 4);
    EXPECT_EQ(rep.checked, ball(2, 4).size() - 1);
    EXPECT_TRUE(rep.hits.empty());
}

TEST(FixedPoints, KleinSubgroupsActFreelyOnRn)
{
    for (int n = 2; n <= 3; ++n) {
        const auto rep = fixed_point_probe(rn_model(n), 3);
        for (const auto &h : rep.hits) {
            EXPECT_FALSE(h.in_klein_subgroup) << h.element.str();
            EXPECT_EQ(rn_action(h.element, h.point), h.point);
        }
    }
}

TEST(Injectivity, Gamma3)
{
    const auto r1 = injectivity_probe(1);
    EXPECT_EQ(r1.checked, 5u);
    EXPECT_EQ(r1.distinct, 5u);
    const auto r5 = injectivity_probe(5);
    EXPECT_EQ(r5.distinct, r5.checked);
    EXPECT_TRUE(r5.collisions.empty());
}
