#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "trunco/trunc_weights.hpp"

using namespace trunco;

namespace {

TruncatedWeight tw(std::vector<Weight> c) { return TruncatedWeight(std::move(c)); }

Weight random_weight(std::mt19937& rng, int rank)
{
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 3);
    Weight w;
    for (int i = 0; i < rank; ++i) {
        Rational q(num(rng), den(rng));
        q.canonicalize();
        w.coords.push_back(q);
    }
    return w;
}

std::vector<RootCoords> sorted(std::vector<RootCoords> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace

TEST(SingularRoots, Examples)
{
    const RootDatum a2 = build_root_datum("A2");
    EXPECT_EQ(singular_roots(a2, Weight{0, 0}).size(), 6u);
    EXPECT_TRUE(singular_roots(a2, Weight{1, 1}).empty());
    EXPECT_EQ(sorted(singular_roots(a2, Weight{1, 0})), sorted({{0, 1}, {0, -1}}));
}

TEST(SingularRoots, TransportUnderWeylGroup)
{
    for (const char* type : {"A2", "B2", "G2"}) {
        const RootDatum d = build_root_datum(type);
        const WeylGroup W(d);
        std::vector<Weight> samples;
        for (int a = -2; a <= 2; ++a) {
            for (int b = -2; b <= 2; ++b) {
                samples.push_back(Weight{a, b});
            }
        }
        for (std::size_t k = 0; k < W.size(); ++k) {
            const WeylElement& w = W.element(k);
            for (const auto& mu : samples) {
                std::vector<RootCoords> image;
                for (const auto& beta : singular_roots(d, mu)) {
                    image.push_back(w.act_root(beta));
                }
                ASSERT_EQ(sorted(singular_roots(d, w.act(mu))), sorted(image)) << type << mu.str();
            }
        }
    }
}

TEST(StandardLevi, Examples)
{
    const RootDatum a2 = build_root_datum("A2");
    auto empty = standard_levi(a2, {});
    ASSERT_TRUE(empty);
    EXPECT_TRUE(empty->J.empty());
    EXPECT_EQ(empty->sub.rank(), 0);
    auto full = standard_levi(a2, singular_roots(a2, Weight{0, 0}));
    ASSERT_TRUE(full);
    EXPECT_EQ(full->J, (std::vector<int>{0, 1}));
    EXPECT_FALSE(standard_levi(a2, {{1, 1}, {-1, -1}}));
    auto j2 = standard_levi(a2, singular_roots(a2, Weight{1, 0}));
    ASSERT_TRUE(j2);
    EXPECT_EQ(j2->J, (std::vector<int>{1}));
}

TEST(StandardLevi, SingularSetsOfRankTwo)
{
    const RootDatum b2 = build_root_datum("B2");
    // <(0,1), a1 check> = 0 only: Phi = {+-a1}
    const auto roots = singular_roots(b2, Weight{0, 1});
    ASSERT_EQ(roots.size(), 2u);
    auto levi = standard_levi(b2, roots);
    ASSERT_TRUE(levi);
    EXPECT_EQ(levi->J, (std::vector<int>{0}));
    // a single non-simple pair {+-(a1+a2)} is not standard
    EXPECT_FALSE(standard_levi(b2, {{1, 1}, {-1, -1}}));
    EXPECT_FALSE(standard_levi(b2, {{1, 2}, {-1, -2}}));
}

TEST(TwistingWord, Examples)
{
    const RootDatum a2 = build_root_datum("A2");
    auto regular = find_twisting_word(a2, Weight{1, 1});
    EXPECT_EQ(regular.w.length(), 0);
    EXPECT_TRUE(regular.levi.J.empty());
    auto zero = find_twisting_word(a2, Weight{0, 0});
    EXPECT_EQ(zero.w.length(), 0);
    EXPECT_EQ(zero.levi.J, (std::vector<int>{0, 1}));
    auto twisted = find_twisting_word(a2, Weight{1, -1});
    EXPECT_EQ(twisted.w.word(), (std::vector<int>{0}));
    EXPECT_EQ(twisted.levi.J, (std::vector<int>{1}));
    EXPECT_TRUE(twisted.nonvanishing_along_word);
}

TEST(TwistingWord, MinimalAndNonvanishingAlongWordInRankTwo)
{
    for (const char* type : {"A2", "B2", "G2"}) {
        const RootDatum d = build_root_datum(type);
        const WeylGroup W(d);
        for (int a = -3; a <= 3; ++a) {
            for (int b = -3; b <= 3; ++b) {
                const Weight mu{a, b};
                const auto found = minimal_twisting_words(d, mu);
                int best = 1 << 20;
                for (std::size_t k = 0; k < W.size(); ++k) {
                    if (standard_levi(d, singular_roots(d, W.element(k).act(mu)))) {
                        best = std::min(best, W.element(k).length());
                    }
                }
                for (const auto& t : found) {
                    ASSERT_EQ(t.w.length(), best) << type << mu.str();
                    ASSERT_TRUE(t.nonvanishing_along_word) << type << mu.str();
                }
                EXPECT_EQ(find_twisting_word(d, mu, TieBreak::Last).w, found.back().w);
            }
        }
    }
}

TEST(NDot, Examples)
{
    const RootDatum a1 = build_root_datum("A1");
    const WeylElement s = WeylElement::simple(a1, 0);
    const TruncatedWeight L = tw({Weight{3}, Weight{0}, Weight{5}});
    EXPECT_EQ(n_dot(WeylElement::identity(a1), L), L);
    const auto moved = n_dot(s, L);
    // c = n + 1 = 3: -3 - 2*3
    EXPECT_EQ(moved[0], Weight{-9});
    EXPECT_EQ(moved[1], Weight{0});
    EXPECT_EQ(moved[2], Weight{-5});
    EXPECT_EQ(dot_shift(0), 1);

    const RootDatum a2 = build_root_datum("A2");
    const TruncatedWeight M = tw({Weight{2, -1}, Weight{1, 1}});
    const auto s1 = WeylElement::simple(a2, 0);
    EXPECT_EQ(n_dot(s1, M)[0], s1.act(M[0]) - Rational(dot_shift(1)) * a2.simple_root(0));
}

TEST(NDot, GroupAction)
{
    std::mt19937 rng(11);
    for (const char* type : {"A2", "B2"}) {
        const RootDatum d = build_root_datum(type);
        const WeylGroup W(d);
        std::uniform_int_distribution<std::size_t> pick(0, W.size() - 1);
        std::uniform_int_distribution<int> level(0, 2);
        for (int t = 0; t < 200; ++t) {
            const WeylElement& a = W.element(pick(rng));
            const WeylElement& b = W.element(pick(rng));
            TruncatedWeight L;
            for (int i = 0, n = level(rng); i <= n; ++i) {
                L.components.push_back(random_weight(rng, d.rank()));
            }
            ASSERT_EQ(n_dot(a * b, L), n_dot(a, n_dot(b, L)));
        }
    }
}

TEST(NDot, PreservesBlocks)
{
    std::mt19937 rng(5);
    const RootDatum d = build_root_datum("A2");
    const WeylGroup W(d);
    for (int t = 0; t < 100; ++t) {
        const Weight tail = random_weight(rng, 2);
        const TruncatedWeight a = tw({random_weight(rng, 2), tail});
        const TruncatedWeight b = tw({random_weight(rng, 2), tail});
        const WeylElement& w = W.element(static_cast<std::size_t>(t) % W.size());
        ASSERT_TRUE(same_block(n_dot(w, a), n_dot(w, b)));
    }
}

TEST(SameBlock, Examples)
{
    const TruncatedWeight L = tw({Weight{1}, Weight{2}});
    EXPECT_TRUE(same_block(L, L));
    EXPECT_TRUE(same_block(L, tw({Weight{-7}, Weight{2}})));
    EXPECT_FALSE(same_block(L, tw({Weight{1}, Weight{3}})));
    EXPECT_THROW(same_block(L, tw({Weight{1}})), ContractError);
}

TEST(Linked, Examples)
{
    const RootDatum a2 = build_root_datum("A2");
    const LeviDatum none = LeviDatum::of(a2, {});
    const TruncatedWeight L = tw({Weight{1, 2}, Weight{1, 1}});
    EXPECT_TRUE(linked(a2, L, L, none));
    EXPECT_FALSE(linked(a2, L, L.with_base(Weight{0, 2}), none));
    const LeviDatum all = LeviDatum::of(a2, {0, 1});
    const TruncatedWeight Z = tw({Weight{1, 2}, Weight{0, 0}});
    EXPECT_TRUE(linked(a2, Z, Z.with_base(Weight(std::vector<Rational>{Rational(1, 3), 7})), all));
    const LeviDatum j1 = LeviDatum::of(a2, {0});
    const TruncatedWeight S = tw({Weight{0, 0}, Weight{0, 1}});
    EXPECT_TRUE(linked(a2, S, S.with_base(Weight{-2, 1}), j1));
    EXPECT_FALSE(linked(a2, S, S.with_base(Weight{-1, -1}), j1));
    EXPECT_THROW(linked(a2, S, S, none), ContractError);
}

TEST(Linked, EquivalenceRelationOnRandomTriples)
{
    std::mt19937 rng(3);
    const RootDatum a2 = build_root_datum("A2");
    const LeviDatum j1 = LeviDatum::of(a2, {0});
    const Weight tail{0, 1};
    std::uniform_int_distribution<int> k(-2, 2);
    auto sample = [&] {
        // lattice points near the base so that linkage actually occurs
        Weight b = Weight{1, 0} - Rational(k(rng)) * a2.simple_root(0);
        if (k(rng) == 0) {
            b = b - a2.simple_root(1);
        }
        return tw({b, tail});
    };
    for (int t = 0; t < 300; ++t) {
        const auto a = sample();
        const auto b = sample();
        const auto c = sample();
        ASSERT_TRUE(linked(a2, a, a, j1));
        ASSERT_EQ(linked(a2, a, b, j1), linked(a2, b, a, j1));
        if (linked(a2, a, b, j1) && linked(a2, b, c, j1)) {
            ASSERT_TRUE(linked(a2, a, c, j1));
        }
    }
}

TEST(CentralShift, Examples)
{
    const RootDatum a2 = build_root_datum("A2");
    const TruncatedWeight L = tw({Weight{1, 2}, Weight{0, 3}});
    const TruncatedWeight zero = tw({Weight{0, 0}, Weight{0, 0}});
    EXPECT_EQ(central_shift(L, zero, LeviDatum::of(a2, {0, 1})), L);
    EXPECT_THROW(central_shift(L, tw({Weight{0, 1}, Weight{0, 0}}), LeviDatum::of(a2, {0, 1})), ContractError);
    const auto shifted = central_shift(L, tw({Weight{0, 0}, Weight{0, 5}}), LeviDatum::of(a2, {0}));
    EXPECT_EQ(shifted[1], (Weight{0, 8}));
    EXPECT_THROW(central_shift(L, tw({Weight{0, 0}, Weight{1, 5}}), LeviDatum::of(a2, {0})), ContractError);
}
