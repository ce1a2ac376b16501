#include <algorithm>
#include <map>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "hwg/hw_group.hpp"
#include "hwg/quotient_w.hpp"
#include "support.hpp"

using namespace hwg;
using hwg::testing::oracle;

namespace {

GroupElement el(int n, ReducedWord w, std::vector<int> t)
{
    return GroupElement(n, std::move(w), LatticeVector(t.begin(), t.end()));
}

} // namespace

TEST(SignAction, Examples)
{
    EXPECT_EQ(sign_action(1, {0, 1, 0}), (LatticeVector{0, -1, 0}));
    EXPECT_EQ(sign_action(2, {0, 5, 0}), (LatticeVector{0, 5, 0}));
    const LatticeVector t{3, -2, 7, 1};
    for (int i = 1; i <= 4; ++i) EXPECT_EQ(sign_action(i, sign_action(i, t)), t);
}

TEST(AppendLetter, Examples)
{
    const auto x1 = append_letter(GroupElement::identity(2), 1, 1);
    EXPECT_EQ(x1, el(2, {1}, {0, 0}));
    EXPECT_EQ(append_letter(x1, 1, 1), el(2, {}, {1, 0}));
    EXPECT_EQ(append_letter(x1, 1, -1), GroupElement::identity(2));
    EXPECT_EQ(evaluate(2, std::vector<Syllable>{{1, 1}, {2, 1}, {2, 1}, {1, 1}}), el(2, {}, {1, -1}));
}

TEST(AppendLetter, MatchesOracleOnRandomWords)
{
    std::mt19937_64 rng(7);
    for (int n = 1; n <= 5; ++n)
        for (int k = 0; k < 300; ++k) {
            const auto w = hwg::testing::random_word(rng, n, 16);
            EXPECT_EQ(oracle(evaluate(n, w)), oracle(n, w));
        }
}

TEST(NormalForm, UniqueOnOracleClasses)
{
    // Words with equal faithful images must have equal normal forms.
    std::mt19937_64 rng(8);
    std::map<std::pair<std::vector<int>, std::vector<long long>>, GroupElement> seen;
    for (int k = 0; k < 4000; ++k) {
        const auto w = hwg::testing::random_word(rng, 2, 6);
        const auto img = oracle(2, w);
        std::vector<int> key_w = img.w;
        for (int s : img.sign) key_w.push_back(s + 10);
        const GroupElement g = evaluate(2, w);
        auto [it, inserted] = seen.emplace(std::make_pair(key_w, img.shift2), g);
        if (!inserted) EXPECT_EQ(it->second, g);
    }
}

TEST(Multiply, Examples)
{
    const auto a = el(3, {1, 2}, {1, 0, -2});
    EXPECT_EQ(multiply(a, GroupElement::identity(3)), a);
    EXPECT_EQ(multiply(GroupElement::identity(3), a), a);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            if (i != j) EXPECT_TRUE(evaluate(3, relator(i, j)).is_identity());
    const auto x1 = GroupElement::generator(2, 1);
    EXPECT_EQ(multiply(x1, x1), el(2, {}, {1, 0}));
}

TEST(Multiply, Associativity)
{
    std::mt19937_64 rng(9);
    for (int n : {2, 3, 4})
        for (int k = 0; k < 1000; ++k) {
            const auto a = hwg::testing::random_element(rng, n);
            const auto b = hwg::testing::random_element(rng, n);
            const auto c = hwg::testing::random_element(rng, n);
            EXPECT_EQ(multiply(multiply(a, b), c), multiply(a, multiply(b, c)));
        }
}

TEST(Multiply, AgreesWithConcatenation)
{
    std::mt19937_64 rng(10);
    for (int k = 0; k < 500; ++k) {
        auto u = hwg::testing::random_word(rng, 3, 10), v = hwg::testing::random_word(rng, 3, 10);
        const auto a = evaluate(3, u), b = evaluate(3, v);
        u.insert(u.end(), v.begin(), v.end());
        EXPECT_EQ(multiply(a, b), evaluate(3, u));
    }
}

TEST(Relators, IdentityUpToRankSix)
{
    for (int n = 2; n <= 6; ++n)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                if (i != j) EXPECT_TRUE(evaluate(n, relator(i, j)).is_identity()) << n << ' ' << i << ' ' << j;
}

TEST(Inverse, Laws)
{
    EXPECT_EQ(inverse(GroupElement::identity(3)), GroupElement::identity(3));
    EXPECT_EQ(inverse(el(3, {}, {1, -2, 4})), el(3, {}, {-1, 2, -4}));
    std::mt19937_64 rng(12);
    for (int n : {1, 2, 3, 5})
        for (int k = 0; k < 300; ++k) {
            const auto a = hwg::testing::random_element(rng, n);
            EXPECT_TRUE(multiply(a, inverse(a)).is_identity());
            EXPECT_TRUE(multiply(inverse(a), a).is_identity());
            EXPECT_EQ(inverse(inverse(a)), a);
        }
}

TEST(Power, MatchesRepeatedProduct)
{
    std::mt19937_64 rng(13);
    for (int k = 0; k < 100; ++k) {
        const auto a = hwg::testing::random_element(rng, 3, 6);
        GroupElement acc = GroupElement::identity(3);
        for (int e = 0; e <= 6; ++e) {
            EXPECT_EQ(power(a, e), acc);
            EXPECT_EQ(power(a, -e), inverse(acc));
            acc = multiply(acc, a);
        }
    }
}

TEST(Parse, Grammar)
{
    EXPECT_EQ(parse_element("x1 x2^-1 x1^2", 2),
              append_letter(append_letter(append_letter(append_letter(GroupElement::identity(2), 1, 1), 2, -1), 1, 1), 1, 1));
    EXPECT_TRUE(parse_element("", 2).is_identity());
    EXPECT_TRUE(parse_element("   ", 4).is_identity());
    EXPECT_THROW(parse_element("x3", 2), ParseError);
    EXPECT_THROW(parse_element("x0", 2), ParseError);
    EXPECT_THROW(parse_element("x1^0", 2), ParseError);
    EXPECT_THROW(parse_element("y1", 2), ParseError);
    EXPECT_THROW(parse_element("x1^", 2), ParseError);
    EXPECT_THROW(parse_element("x", 2), ParseError);
}

TEST(Parse, RoundTripThroughCanonicalWord)
{
    std::mt19937_64 rng(14);
    for (int k = 0; k < 200; ++k) {
        const auto a = hwg::testing::random_element(rng, 3);
        std::string s;
        for (const auto &syl : hwg::testing::as_word(a)) s += "x" + std::to_string(syl.gen) + "^" + std::to_string(syl.exp) + " ";
        EXPECT_EQ(parse_element(s, 3), a);
    }
}

TEST(GroupElement, RejectsUnreducedWords)
{
    EXPECT_THROW(GroupElement(2, {1, 1}, {0, 0}), std::invalid_argument);
    EXPECT_THROW(GroupElement(2, {3}, {0, 0}), std::out_of_range);
    EXPECT_THROW(GroupElement(2, {1}, {0}), std::invalid_argument);
    EXPECT_EQ(el(2, {1, 2}, {0, 1}).str(), "w = x1 x2 | t = (0,1)");
    EXPECT_EQ(GroupElement::identity(2).str(), "w =  | t = (0,0)");
}

TEST(ProjectW, Examples)
{
    EXPECT_TRUE(project_w(el(3, {}, {2, -1, 5})).empty());
    EXPECT_EQ(project_w(evaluate(3, std::vector<Syllable>{{1, 1}, {2, 1}, {1, 1}})), (ReducedWord{1, 2, 1}));
    std::mt19937_64 rng(15);
    for (int k = 0; k < 300; ++k) {
        const auto a = hwg::testing::random_element(rng, 4), b = hwg::testing::random_element(rng, 4);
        EXPECT_EQ(project_w(multiply(a, b)), w_multiply(project_w(a), project_w(b)));
    }
}

TEST(Phi, Examples)
{
    EXPECT_EQ(phi(1, GroupElement::generator(2, 1)), (ReducedWord{1, 2}));
    EXPECT_EQ(phi(1, GroupElement::generator(2, 2)), (ReducedWord{1}));
    for (int n = 2; n <= 4; ++n)
        for (int i = 1; i <= n; ++i)
            for (int a = 1; a <= n; ++a)
                for (int b = 1; b <= n; ++b)
                    if (a != b) EXPECT_TRUE(phi(i, evaluate(n, relator(a, b))).empty());
}

TEST(Phi, Homomorphism)
{
    std::mt19937_64 rng(16);
    for (int k = 0; k < 300; ++k) {
        const auto a = hwg::testing::random_element(rng, 3), b = hwg::testing::random_element(rng, 3);
        for (int i = 1; i <= 3; ++i) EXPECT_EQ(phi(i, multiply(a, b)), w_multiply(phi(i, a), phi(i, b)));
    }
}

TEST(Abelianize, Examples)
{
    EXPECT_EQ(abelianize(GroupElement::generator(3, 1)), (std::vector<int>{1, 0, 0}));
    EXPECT_EQ(abelianize(power(GroupElement::generator(3, 1), 4)), (std::vector<int>{0, 0, 0}));
    EXPECT_EQ(abelianize(power(GroupElement::generator(3, 2), -1)), (std::vector<int>{0, 3, 0}));
    EXPECT_EQ(abelianize_rank1(power(GroupElement::generator(1, 1), -5)), -5);
    for (int n = 2; n <= 4; ++n)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                if (i == j) continue;
                // exponent sums of the relator: x_i cancels, x_j appears 4 times
                const auto sums = exponent_sums(n, relator(i, j));
                for (int k = 1; k <= n; ++k) EXPECT_EQ(sums[k - 1], k == j ? 4 : 0);
            }
}

TEST(Abelianize, Homomorphism)
{
    std::mt19937_64 rng(18);
    for (int k = 0; k < 300; ++k) {
        const auto a = hwg::testing::random_element(rng, 3), b = hwg::testing::random_element(rng, 3);
        auto sum = abelianize(a);
        const auto bb = abelianize(b);
        for (int j = 0; j < 3; ++j) sum[j] = (sum[j] + bb[j]) % 4;
        EXPECT_EQ(abelianize(multiply(a, b)), sum);
    }
}

TEST(Signs, SquareOfCommutatorActsTrivially)
{
    for (int n = 2; n <= 5; ++n)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                if (i != j) EXPECT_TRUE(word_signs(n, std::vector{i, j, i, j}).is_identity());
    EXPECT_EQ(letter_signs(3, 2).s, (std::vector<int>{-1, 1, -1}));
}

TEST(Ball, Sizes)
{
    EXPECT_EQ(ball(1, 3).size(), 7u);
    EXPECT_EQ(ball(2, 0).size(), 1u);
    EXPECT_EQ(ball(2, 1).size(), 5u);
    const auto b = ball(3, 3);
    EXPECT_EQ(std::set<GroupElement>(b.begin(), b.end()).size(), b.size());
    EXPECT_THROW(ball(3, 6, 100), ResourceLimit);
}

TEST(Ball, MatchesOracleEnumeration)
{
    // Distinct oracle images among all words of length <= 3 in G_2.
    std::set<std::pair<std::vector<int>, std::vector<long long>>> images;
    std::vector<std::vector<Syllable>> frontier{{}};
    for (int len = 0; len <= 3; ++len) {
        std::vector<std::vector<Syllable>> next;
        for (const auto &w : frontier) {
            const auto img = oracle(2, w);
            std::vector<int> key = img.w;
            for (int s : img.sign) key.push_back(s + 10);
            images.emplace(key, img.shift2);
            for (int g = 1; g <= 2; ++g)
                for (int e : {1, -1}) {
                    auto u = w;
                    u.push_back({g, e});
                    next.push_back(u);
                }
        }
        frontier = std::move(next);
    }
    EXPECT_EQ(ball(2, 3).size(), images.size());
}

TEST(Probes, TorsionAndCenter)
{
    EXPECT_TRUE(torsion_probe(2, 3, 12).hits.empty());
    EXPECT_TRUE(torsion_probe(1, 4, 12).hits.empty());
    EXPECT_TRUE(center_probe(2, 4).central.empty());
    EXPECT_TRUE(center_probe(3, 3).central.empty());
    EXPECT_EQ(torsion_probe(2, 2, 4).checked, ball(2, 2).size() - 1);
}

TEST(KleinMembership, Examples)
{
    for (int i = 1; i <= 3; ++i) EXPECT_TRUE(klein_membership(el(3, {}, {1, -1, 2}), i));
    for (int i = 1; i <= 3; ++i) EXPECT_FALSE(klein_membership(el(3, {1, 2}, {0, 0, 0}), i));
    EXPECT_TRUE(klein_membership(el(3, {2}, {4, 0, -1}), 2));
    EXPECT_FALSE(klein_membership(el(3, {2}, {4, 0, -1}), 1));
}

TEST(NormalForm, ConfluentUnderRelatorInsertion)
{
    std::mt19937_64 rng(19);
    for (int n : {2, 3, 4})
        for (int k = 0; k < 300; ++k) {
            const auto w = hwg::testing::random_word(rng, n, 12);
            auto variant = w;
            for (int ins = 0; ins < 3; ++ins) {
                const int i = 1 + static_cast<int>(rng() % n);
                const int j = 1 + (i + static_cast<int>(rng() % (n - 1))) % n;
                auto r = relator(i, j);
                if (rng() % 2) {
                    std::reverse(r.begin(), r.end());
                    for (auto &s : r) s.exp = -s.exp;
                }
                const auto pos = variant.begin() + static_cast<long>(rng() % (variant.size() + 1));
                variant.insert(pos, r.begin(), r.end());
            }
            EXPECT_EQ(evaluate(n, variant), evaluate(n, w));
        }
}

TEST(Ball, MonotoneSizes)
{
    for (int n = 1; n <= 3; ++n) {
        std::size_t prev = 0;
        for (int r = 0; r <= 4; ++r) {
            const auto s = ball(n, r).size();
            EXPECT_GT(s, prev);
            if (n == 1) EXPECT_EQ(s, static_cast<std::size_t>(2 * r + 1));
            prev = s;
        }
    }
}
