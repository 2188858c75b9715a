#include <gtest/gtest.h>

#include <random>
#include <set>

#include "sds/group.hpp"

using namespace sds;

TEST(Group, MakeGroupOrderAndExponent)
{
    EXPECT_EQ(make_group({7}).order(), 7);
    EXPECT_EQ(make_group({7}).exponent(), 7);
    const auto g233 = make_group({2, 3, 3});
    EXPECT_EQ(g233.order(), 18);
    EXPECT_EQ(g233.exponent(), 6);
    EXPECT_EQ(g233.orders(), (std::vector<i64>{2, 3, 3}));  // not canonicalized
    EXPECT_EQ(make_group({4, 6}).order(), 24);
    EXPECT_EQ(make_group({4, 6}).exponent(), 12);
}

TEST(Group, InvalidGroups)
{
    for (const auto& bad : std::vector<std::vector<i64>>{{}, {1}, {3, 0}, {-2}}) {
        try {
            make_group(bad);
            FAIL() << "accepted invalid group";
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), Errc::invalid_group);
        }
    }
}

TEST(Group, LiteralRoundTrip)
{
    EXPECT_EQ(parse_group_literal("2x3x3").orders(), (std::vector<i64>{2, 3, 3}));
    EXPECT_EQ(parse_group_literal("19").literal(), "19");
    EXPECT_THROW(parse_group_literal("2xx3"), Error);
    EXPECT_THROW(parse_group_literal("a"), Error);
}

TEST(Group, RankUnrank)
{
    const auto c7 = make_group({7});
    EXPECT_EQ(element_rank(c7, {{3}}), 3);
    const auto g = make_group({2, 3, 3});
    EXPECT_EQ(element_rank(g, {{0, 0, 0}}), 0);
    EXPECT_EQ(element_unrank(g, 17), (GroupElement{{1, 2, 2}}));
    for (i64 r = 0; r < g.order(); ++r) EXPECT_EQ(g.rank(g.unrank(r)), r);
    EXPECT_THROW(g.unrank(18), Error);
    EXPECT_THROW(g.unrank(-1), Error);
    EXPECT_THROW(g.rank({{2, 0, 0}}), Error);
    EXPECT_THROW(g.rank({{0, 0}}), Error);
}

TEST(Group, ElementArithmetic)
{
    const auto c7 = make_group({7});
    EXPECT_EQ(elt_add(c7, {{3}}, {{5}}), (GroupElement{{1}}));
    EXPECT_EQ(elt_neg(c7, {{2}}), (GroupElement{{5}}));
    const auto c19 = make_group({19});
    EXPECT_EQ(elt_scale(c19, 7, {{3}}), (GroupElement{{2}}));
    EXPECT_EQ(elt_scale(c19, -12, {{3}}), (GroupElement{{2}}));

    const auto g = make_group({4, 6});
    for (i64 a = 0; a < g.order(); ++a) {
        const auto x = g.unrank(a);
        EXPECT_EQ(g.scale(1, x), x);
        EXPECT_EQ(g.add(x, g.neg(x)), g.identity());
        for (i64 b = 0; b < g.order(); b += 5) {
            EXPECT_EQ(g.add_ranks(a, b), g.rank(g.add(x, g.unrank(b))));
            EXPECT_EQ(g.sub_ranks(a, b), g.rank(g.add(x, g.neg(g.unrank(b)))));
        }
    }
}

TEST(Group, QuotientExamples)
{
    const auto z20 = make_group({20});
    const auto q = quotient_by_subgroup(z20, {{{5}}});
    EXPECT_EQ(q.kernel_order, 4);
    EXPECT_EQ(q.w(), 5);
    EXPECT_EQ(q.kernel, (std::vector<i64>{0, 5, 10, 15}));

    const auto z7 = make_group({7});
    const auto t = quotient_by_subgroup(z7, {});
    EXPECT_EQ(t.w(), 7);
    EXPECT_EQ(t.kernel_order, 1);
    for (i64 x = 0; x < 7; ++x) EXPECT_EQ(t.projection[static_cast<std::size_t>(x)], x);

    const auto g = make_group({2, 3, 3});
    const auto q2 = quotient_by_subgroup(g, {{{0, 1, 0}}});
    EXPECT_EQ(q2.kernel_order, 3);
    EXPECT_EQ(q2.w(), 6);

    const auto whole = quotient_by_subgroup(z7, {{{1}}});
    EXPECT_EQ(whole.w(), 1);
    EXPECT_TRUE(whole.quotient.is_trivial());
}

// Fibers have d elements, projection is onto and additive, for many kernels.
TEST(Group, QuotientIsHomomorphismProperty)
{
    std::mt19937 rng(7);
    for (const auto& orders : std::vector<std::vector<i64>>{{20}, {2, 3, 3}, {4, 6}, {2, 2, 2}, {3, 9}, {2, 4, 4}}) {
        const auto G = make_group(orders);
        std::uniform_int_distribution<i64> pick(0, G.order() - 1);
        for (int trial = 0; trial < 6; ++trial) {
            std::vector<GroupElement> gens;
            for (int i = 0; i < trial % 3; ++i) gens.push_back(G.unrank(pick(rng)));
            const auto q = quotient_by_subgroup(G, gens);
            EXPECT_EQ(q.kernel_order * q.w(), G.order());
            std::vector<i64> fiber(static_cast<std::size_t>(q.w()), 0);
            for (i64 p : q.projection) ++fiber[static_cast<std::size_t>(p)];
            for (i64 f : fiber) EXPECT_EQ(f, q.kernel_order);
            for (int pair = 0; pair < 100; ++pair) {
                const i64 a = pick(rng), b = pick(rng);
                EXPECT_EQ(q.projection[static_cast<std::size_t>(G.add_ranks(a, b))],
                          q.quotient.add_ranks(q.projection[static_cast<std::size_t>(a)],
                                               q.projection[static_cast<std::size_t>(b)]));
            }
        }
    }
}

TEST(Group, MultiplierOrbitExamples)
{
    const auto z19 = make_group({19});
    const auto orbits = multiplier_orbits(z19, 7);
    ASSERT_EQ(orbits.size(), 7u);
    EXPECT_EQ(orbits[0], (std::vector<i64>{0}));
    for (std::size_t i = 1; i < orbits.size(); ++i) EXPECT_EQ(orbits[i].size(), 3u);

    const auto z7 = make_group({7});
    EXPECT_EQ(multiplier_orbits(z7, 2), (std::vector<std::vector<i64>>{{0}, {1, 2, 4}, {3, 5, 6}}));
    EXPECT_EQ(multiplier_orbits(make_group({2, 3, 3}), 1).size(), 18u);

    try {
        multiplier_orbits(make_group({20}), 5);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::not_a_unit);
    }
}

TEST(Group, UnitsWithOrbitStructure)
{
    const auto u7 = units_with_orbit_structure(make_group({7}));
    EXPECT_NE(std::find(u7.begin(), u7.end(), UnitOrbitCount{2, 3}), u7.end());
    EXPECT_NE(std::find(u7.begin(), u7.end(), UnitOrbitCount{3, 2}), u7.end());
    EXPECT_EQ(u7, (std::vector<UnitOrbitCount>{{1, 7}, {2, 3}, {3, 2}, {4, 3}, {5, 2}, {6, 4}}));
    EXPECT_EQ(units_with_orbit_structure(make_group({2})), (std::vector<UnitOrbitCount>{{1, 2}}));
    const auto u19 = units_with_orbit_structure(make_group({19}));
    EXPECT_NE(std::find(u19.begin(), u19.end(), UnitOrbitCount{7, 7}), u19.end());
}

// Orbit sizes divide ord(t) and sum to v; scaling by a unit is a bijection.
TEST(Group, OrbitSizesProperty)
{
    for (i64 v = 2; v <= 200; ++v) {
        std::vector<std::vector<i64>> shapes{{v}};
        if (v % 4 == 0) shapes.push_back({2, v / 2});
        if (v % 9 == 0) shapes.push_back({3, v / 3});
        for (const auto& orders : shapes) {
            const auto G = make_group(orders);
            for (const auto& [t, count] : units_with_orbit_structure(G)) {
                const i64 ord = multiplicative_order(t, G.exponent());
                i64 total = 0;
                for (const auto& o : multiplier_orbits(G, t)) {
                    EXPECT_EQ(ord % static_cast<i64>(o.size()), 0);
                    total += static_cast<i64>(o.size());
                }
                EXPECT_EQ(total, G.order());
                std::set<i64> image;
                for (i64 x = 0; x < G.order(); ++x) image.insert(G.scale_rank(t, x));
                EXPECT_EQ(static_cast<i64>(image.size()), G.order());
                (void)count;
            }
        }
    }
}
