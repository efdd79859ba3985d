#include <gtest/gtest.h>

#include <random>

#include "support/kl_bar.hpp"
#include "trunco/root_datum.hpp"

using namespace trunco;

namespace {

Weight random_weight(std::mt19937& rng, int rank)
{
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    Weight w;
    for (int i = 0; i < rank; ++i) {
        Rational q(num(rng), den(rng));
        q.canonicalize();
        w.coords.push_back(q);
    }
    return w;
}

} // namespace

TEST(RootDatum, PositiveRootCountsMatchType)
{
    const std::vector<std::pair<const char*, std::size_t>> expected = {
        {"A1", 1}, {"A2", 3}, {"B2", 4}, {"G2", 6}, {"A3", 6}, {"B3", 9}, {"C3", 9}, {"D4", 12},
        {"D5", 20}, {"F4", 24}, {"E6", 36}, {"E7", 63}, {"E8", 120}, {"A1xA1", 2}, {"A2xB2", 7}};
    for (const auto& [type, count] : expected) {
        EXPECT_EQ(build_root_datum(type).num_positive_roots(), count) << type;
    }
}

TEST(RootDatum, SimpleRootsComeFirstInRootOrder)
{
    const RootDatum d = build_root_datum("B3");
    for (int i = 0; i < d.rank(); ++i) {
        RootCoords e(3, 0);
        e[static_cast<std::size_t>(i)] = 1;
        EXPECT_EQ(d.positive_roots()[static_cast<std::size_t>(i)], e);
    }
    for (std::size_t k = 1; k < d.num_positive_roots(); ++k) {
        EXPECT_LE(height(d.positive_roots()[k - 1]), height(d.positive_roots()[k]));
    }
}

TEST(RootDatum, CartanConventions)
{
    const RootDatum b2 = build_root_datum("B2");
    EXPECT_EQ(b2.cartan(0, 1), -1);
    EXPECT_EQ(b2.cartan(1, 0), -2);
    const RootDatum c2 = build_root_datum("C2");
    EXPECT_EQ(c2.cartan(0, 1), -2);
    const RootDatum g2 = build_root_datum("G2");
    EXPECT_EQ(g2.cartan(0, 1), -3);
    EXPECT_EQ(g2.cartan(1, 0), -1);
    // highest roots
    EXPECT_EQ(b2.positive_roots().back(), (RootCoords{1, 2}));
    EXPECT_EQ(g2.positive_roots().back(), (RootCoords{3, 2}));
    EXPECT_EQ(build_root_datum("F4").positive_roots().back(), (RootCoords{2, 3, 4, 2}));
    EXPECT_EQ(build_root_datum("E8").positive_roots().back(), (RootCoords{2, 3, 4, 6, 5, 4, 3, 2}));
}

TEST(RootDatum, EveryRootPairsToTwoWithItsCoroot)
{
    for (const char* type : {"A3", "B3", "C3", "G2", "F4", "D4"}) {
        const RootDatum d = build_root_datum(type);
        for (const auto& beta : d.positive_roots()) {
            EXPECT_EQ(d.pair(d.root_to_weight(beta), beta), 2) << type << to_string(beta);
            EXPECT_EQ(d.pair(d.root_to_weight(beta), negated(beta)), -2);
        }
    }
}

TEST(RootDatum, TypeParsing)
{
    EXPECT_EQ(parse_cartan_type("a1xA1").str(), "A1xA1");
    EXPECT_EQ(parse_cartan_type(" b3 ").str(), "B3");
    for (const char* bad : {"", "A0", "B1", "C1", "D3", "E5", "E9", "F3", "G3", "H3", "Ax", "A1x", "xA1", "A-1", "2A"}) {
        EXPECT_THROW(parse_cartan_type(bad), ParseError) << bad;
    }
}

TEST(RootDatum, RejectsNonFiniteCartanMatrices)
{
    EXPECT_THROW(RootDatum::from_cartan_matrix({{2, -2}, {-2, 2}}), ParseError);
    EXPECT_THROW(RootDatum::from_cartan_matrix({{2, -1}, {0, 2}}), ParseError);
    EXPECT_THROW(RootDatum::from_cartan_matrix({{2, 1}, {1, 2}}), ParseError);
    EXPECT_EQ(RootDatum::from_cartan_matrix({}).rank(), 0);
}

TEST(RootDatum, RhoPairsToOneWithSimpleCoroots)
{
    for (const char* type : {"A2", "B3", "G2", "D4"}) {
        const RootDatum d = build_root_datum(type);
        for (int i = 0; i < d.rank(); ++i) {
            EXPECT_EQ(d.pair(d.rho(), d.positive_roots()[static_cast<std::size_t>(i)]), 1);
        }
    }
}

TEST(WeylAct, Examples)
{
    const RootDatum d = build_root_datum("A2");
    const Weight v{3, -7};
    EXPECT_EQ(weyl_act(WeylElement::identity(d), v), v);
    for (int i = 0; i < 2; ++i) {
        EXPECT_EQ(weyl_act(WeylElement::simple(d, i), d.simple_root(i)), -d.simple_root(i));
    }
    EXPECT_EQ(weyl_act(WeylElement::simple(d, 0), d.root_to_weight({1, 1})), d.root_to_weight({0, 1}));
}

TEST(WeylAct, InverseUndoesActionOnRandomWeights)
{
    std::mt19937 rng(7);
    for (const char* type : {"A2", "B2", "G2", "A3"}) {
        const RootDatum d = build_root_datum(type);
        const WeylGroup W(d);
        for (std::size_t k = 0; k < W.size(); ++k) {
            const WeylElement& w = W.element(k);
            const WeylElement winv = WeylElement::from_word(d, {w.word().rbegin(), w.word().rend()});
            for (int s = 0; s < 100; ++s) {
                const Weight v = random_weight(rng, d.rank());
                ASSERT_EQ(winv.act(w.act(v)), v);
            }
        }
    }
}

TEST(WeylElement, LengthCountsInversions)
{
    for (const char* type : {"A3", "B3", "G2"}) {
        const RootDatum d = build_root_datum(type);
        const WeylGroup W(d);
        for (std::size_t k = 0; k < W.size(); ++k) {
            EXPECT_EQ(W.element(k).length(), W.element(k).count_inversions());
        }
        EXPECT_EQ(W.element(W.longest()).length(), static_cast<int>(d.num_positive_roots()));
    }
}

TEST(WeylElement, NonReducedWordsAreCanonicalized)
{
    const RootDatum d = build_root_datum("A2");
    EXPECT_EQ(WeylElement::from_word(d, {0, 0}).length(), 0);
    EXPECT_EQ(WeylElement::from_word(d, {0, 1, 0, 1}), WeylElement::from_word(d, {1, 0}));
    EXPECT_EQ(WeylElement::from_word(d, {1, 0, 1}).word(), (std::vector<int>{1, 0, 1}));
    EXPECT_EQ(WeylElement::from_word(d, {0, 1, 0, 1}).word(), (std::vector<int>{1, 0}));
    EXPECT_THROW(WeylElement::from_word(d, {2}), ParseError);
}

TEST(WeylGroup, OrdersAndLexFirstWords)
{
    const std::vector<std::pair<const char*, std::size_t>> orders = {
        {"A1", 2}, {"A2", 6}, {"B2", 8}, {"G2", 12}, {"A3", 24}, {"B3", 48}, {"D4", 192}, {"F4", 1152}};
    for (const auto& [type, n] : orders) {
        EXPECT_EQ(WeylGroup(build_root_datum(type)).size(), n) << type;
    }
    const WeylGroup W(build_root_datum("A2"));
    EXPECT_EQ(W.element(W.longest()).word(), (std::vector<int>{0, 1, 0}));
}

TEST(Bruhat, Examples)
{
    const RootDatum d = build_root_datum("A2");
    const auto s1 = WeylElement::simple(d, 0);
    const auto s1s2 = WeylElement::from_word(d, {0, 1});
    const auto s2s1 = WeylElement::from_word(d, {1, 0});
    EXPECT_TRUE(bruhat_leq(WeylElement::identity(d), s1s2));
    EXPECT_TRUE(bruhat_leq(s1s2, s1s2));
    EXPECT_TRUE(bruhat_leq(s1, s1s2));
    EXPECT_FALSE(bruhat_leq(s2s1, s1s2));
}

TEST(Bruhat, PartialOrderAndSubwordAgreementInRankAtMostThree)
{
    for (const char* type : {"A2", "B2", "G2", "A3", "B3", "C3", "A1xA1xA1"}) {
        const RootDatum d = build_root_datum(type);
        const WeylGroup W(d);
        const check::BarInvolutionKL sub(W);
        const std::size_t n = W.size();
        for (std::size_t x = 0; x < n; ++x) {
            for (std::size_t y = 0; y < n; ++y) {
                ASSERT_EQ(W.bruhat_leq(x, y), sub.bruhat(x, y)) << type;
                ASSERT_EQ(W.bruhat_leq(x, y), bruhat_leq(W.element(x), W.element(y))) << type;
                if (x != y && W.bruhat_leq(x, y)) {
                    ASSERT_FALSE(W.bruhat_leq(y, x));
                }
                if (!W.bruhat_leq(x, y)) {
                    continue;
                }
                for (std::size_t z = 0; z < n; ++z) {
                    if (W.bruhat_leq(y, z)) {
                        ASSERT_TRUE(W.bruhat_leq(x, z));
                    }
                }
            }
        }
    }
}

TEST(Dominance, Examples)
{
    const RootDatum a1 = build_root_datum("A1");
    const Weight lam{4};
    EXPECT_TRUE(dominance_leq(a1, lam, lam));
    EXPECT_TRUE(dominance_leq(a1, lam - a1.simple_root(0), lam));
    EXPECT_FALSE(dominance_leq(a1, lam, lam - a1.simple_root(0)));
    const RootDatum a2 = build_root_datum("A2");
    const Weight hi{1, 1};
    EXPECT_FALSE(dominance_leq(a2, hi - a2.simple_root(1), hi, std::vector<int>{0}));
    EXPECT_TRUE(dominance_leq(a2, hi - a2.simple_root(1), hi, std::vector<int>{1}));
    EXPECT_FALSE(dominance_leq(a2, hi - Weight(std::vector<Rational>{Rational(1, 2), 0}), hi));
}
