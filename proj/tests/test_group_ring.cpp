#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sds/sds.hpp"

using namespace sds;

namespace {

GroupRingElement random_element(const AbelianGroup& G, std::mt19937& rng, int lo, int hi)
{
    std::uniform_int_distribution<int> pick(lo, hi);
    GroupRingElement a(G);
    for (auto& c : a.coeffs) c = pick(rng);
    return a;
}

AbelianGroup random_group(std::mt19937& rng, i64 max_v)
{
    std::uniform_int_distribution<int> nf(1, 3), m(2, 7);
    for (;;) {
        std::vector<i64> orders;
        i64 v = 1;
        for (int i = nf(rng); i-- > 0;) {
            orders.push_back(m(rng));
            v *= orders.back();
        }
        if (v <= max_v) return make_group(orders);
    }
}

} // namespace

TEST(GroupRing, SevenSixMinusOneSpectrum)
{
    const auto G = make_group({7});
    const auto a = from_signed_set(G, {{{1}}, {{2}}, {{4}}}, {{{3}}, {{5}}, {{6}}});
    EXPECT_EQ(a.coeffs, (std::vector<i64>{0, 1, 1, -1, 1, -1, -1}));
    const auto spec = difference_spectrum(a);
    EXPECT_EQ(spec.coeffs, (std::vector<i64>{6, -1, -1, -1, -1, -1, -1}));
    const auto rep = check_sds_equation(a, -1);
    EXPECT_TRUE(rep.holds);
    EXPECT_EQ(rep.k, 6);
    EXPECT_FALSE(check_sds_equation(a, 0).holds);
    EXPECT_EQ(check_sds_equation(a, 0).violations.size(), 6u);
}

TEST(GroupRing, OverlapRejected)
{
    const auto G = make_group({7});
    try {
        from_signed_set(G, {{{1}}}, {{{1}}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::not_disjoint);
    }
}

TEST(GroupRing, MismatchedGroups)
{
    GroupRingElement a(make_group({6})), b(make_group({2, 3}));
    try {
        convolve(a, b);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::group_mismatch);
    }
}

TEST(GroupRing, NonSignedCoefficientRejected)
{
    GroupRingElement a(make_group({5}));
    a.coeffs[2] = 2;
    EXPECT_THROW(check_sds_equation(a, 0), Error);
}

TEST(GroupRing, OverflowDetected)
{
    GroupRingElement a(make_group({2}));
    a.coeffs = {std::numeric_limits<i64>::max() / 2, std::numeric_limits<i64>::max() / 2};
    try {
        convolve(a, a);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::overflow);
    }
}

TEST(GroupRing, RingAxiomsProperty)
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const auto G = random_group(rng, 60);
        const auto a = random_element(G, rng, -3, 3);
        const auto b = random_element(G, rng, -3, 3);
        const auto c = random_element(G, rng, -3, 3);
        EXPECT_EQ(convolve(a, b), convolve(b, a));
        EXPECT_EQ(convolve(convolve(a, b), c), convolve(a, convolve(b, c)));
        EXPECT_EQ(involution(involution(a)), a);
        EXPECT_EQ(involution(convolve(a, b)), convolve(involution(a), involution(b)));
        const auto spec = difference_spectrum(a);
        EXPECT_EQ(spec.sum(), a.sum() * a.sum());
        EXPECT_EQ(involution(spec), spec);
    }
}

TEST(GroupRing, SpectrumMatchesPairwiseOracle)
{
    std::mt19937 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        const auto G = random_group(rng, 50);
        const auto a = random_element(G, rng, -1, 1);
        const std::vector<long> orders(G.orders().begin(), G.orders().end());
        std::map<oracle::Coords, int> signs;
        for (i64 r = 0; r < G.order(); ++r) {
            const auto e = G.unrank(r);
            signs[oracle::Coords(e.coords.begin(), e.coords.end())] = static_cast<int>(a.coeffs[static_cast<std::size_t>(r)]);
        }
        const auto expected = oracle::pairwise_differences(orders, signs);
        const auto spec = difference_spectrum(a);
        for (i64 r = 0; r < G.order(); ++r) {
            const auto e = G.unrank(r);
            EXPECT_EQ(spec.coeffs[static_cast<std::size_t>(r)], expected.at(oracle::Coords(e.coords.begin(), e.coords.end())));
        }
    }
}

TEST(GroupRing, ProjectionIsRingHomomorphism)
{
    std::mt19937 rng(5);
    for (const auto& orders : std::vector<std::vector<i64>>{{20}, {2, 3, 3}, {4, 6}, {3, 3, 3}}) {
        const auto G = make_group(orders);
        const auto q = quotient_by_subgroup(G, {G.unrank(1)});
        for (int trial = 0; trial < 10; ++trial) {
            const auto a = random_element(G, rng, -2, 2);
            const auto b = random_element(G, rng, -2, 2);
            EXPECT_EQ(project_ring_element(convolve(a, b), q),
                      convolve(project_ring_element(a, q), project_ring_element(b, q)));
            EXPECT_EQ(project_ring_element(involution(a), q), involution(project_ring_element(a, q)));
        }
    }
}

TEST(GroupRing, ProjectionOfKnownSetSatisfiesIntersectionIdentities)
{
    const auto rep = orbit_search(make_group({20}), 11, 2);
    ASSERT_FALSE(rep.sets_found.empty());
    const auto G = make_group({20});
    const auto q = quotient_by_subgroup(G, {{{5}}});
    const auto b = project_ring_element(rep.sets_found.front().ring(), q);
    i64 sum = 0, sq = 0;
    for (i64 x : b.coeffs) {
        sum += x;
        sq += x * x;
    }
    EXPECT_EQ(sum, 7);
    EXPECT_EQ(sq, 11 + 2 * (4 - 1));
}
