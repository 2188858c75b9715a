#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "sds/sds.hpp"

using namespace sds;

namespace {

std::set<std::string> keys_of(const SearchReport& r) { return {r.keys.begin(), r.keys.end()}; }

/// Least member of the oracle's explicit equivalence class, as a key string.
std::string oracle_class_min(const std::vector<long>& orders, const oracle::Signs& s)
{
    const auto cls = oracle::equivalence_class(orders, s);
    std::string best;
    for (const auto& img : cls) {
        std::string k(img.size(), '1');
        for (std::size_t i = 0; i < img.size(); ++i) k[i] = static_cast<char>('1' + img[i]);
        if (best.empty() || k < best) best = k;
    }
    return best;
}

} // namespace

TEST(Multipliers, Examples)
{
    const auto m19 = numerical_multipliers(make_group({19}), 11);
    ASSERT_TRUE(m19.applicable);
    EXPECT_EQ(m19.modulus_e, 19);
    EXPECT_EQ(m19.multipliers, (std::vector<i64>{1, 7, 11}));

    const auto m20 = numerical_multipliers(make_group({20}), 9);
    ASSERT_TRUE(m20.applicable);
    EXPECT_EQ(m20.multipliers, (std::vector<i64>{1, 3, 7, 9}));

    EXPECT_FALSE(numerical_multipliers(make_group({20}), 10).applicable);
    EXPECT_FALSE(numerical_multipliers(make_group({7}), 0).applicable);

    const auto m55 = numerical_multipliers(make_group({55}), 9);
    EXPECT_EQ(m55.multipliers.front(), 1);
    EXPECT_TRUE(std::binary_search(m55.multipliers.begin(), m55.multipliers.end(), 3));
}

// The result is closed under multiplication and every element is a power of each prime of n.
TEST(Multipliers, SubgroupProperty)
{
    for (i64 v = 5; v <= 120; ++v)
        for (i64 n = 2; n <= 30; ++n) {
            const auto G = make_group({v});
            const auto m = numerical_multipliers(G, n);
            if (!m.applicable) continue;
            std::set<i64> S(m.multipliers.begin(), m.multipliers.end());
            EXPECT_TRUE(S.count(1));
            for (i64 a : S)
                for (i64 b : S) EXPECT_TRUE(S.count(a * b % v));
            for (const auto& [p, e] : factorize(n)) {
                (void)e;
                std::set<i64> powers;
                i64 x = 1;
                do {
                    powers.insert(x);
                    x = x * (p % v) % v;
                } while (x != 1);
                for (i64 t : S) EXPECT_TRUE(powers.count(t)) << v << " " << n << " " << t;
            }
        }
}

TEST(Intersection, FrozenExample)
{
    const auto p = *derive_params(20, 11, 2).params;
    const auto sols = intersection_solutions(p, 4, 5);
    std::set<std::vector<i64>> got;
    for (const auto& s : sols) got.insert(s.b);
    EXPECT_EQ(got, (std::set<std::vector<i64>>{{3, 2, 2, 0, 0}, {2, 2, 2, 2, -1}}));
}

TEST(Intersection, Preconditions)
{
    const auto p = *derive_params(7, 6, -1).params;
    try {
        intersection_solutions(p, 7, 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::precondition);
    }
    EXPECT_THROW(intersection_solutions(p, 2, 3), Error);
    // The unrestricted enumerator accepts w = 1: the only multiset is (s).
    const auto deg = detail::enumerate_intersection_multisets(p, 7, 1);
    ASSERT_EQ(deg.size(), 1u);
    EXPECT_EQ(deg.front().b, (std::vector<i64>{0}));
}

// Brute force over all integer vectors in [-d, d]^w, sorted nonincreasing.
TEST(Intersection, MatchesBruteForce)
{
    for (const auto& [v, k, l, d, w] : std::vector<std::array<i64, 5>>{
             {20, 11, 2, 4, 5}, {20, 11, 2, 5, 4}, {18, 13, 4, 3, 6}, {18, 13, 4, 6, 3},
             {12, 11, 7, 4, 3}, {21, 16, 11, 3, 7}, {16, 6, 2, 4, 4}, {15, 7, 3, 3, 5}}) {
        const auto verdict = derive_params(v, k, l);
        if (!verdict.feasible() || d < 2 || w < 2) continue;
        const auto p = *verdict.params;
        std::set<std::vector<i64>> expected;
        std::vector<i64> b(static_cast<std::size_t>(w), -d);
        const i64 bound = std::min(d, k);
        for (;;) {
            bool sorted = std::is_sorted(b.begin(), b.end(), std::greater<>());
            i64 sum = 0, sq = 0, minc = 0, maxc = 0;
            bool in_range = true;
            for (i64 x : b) {
                sum += x;
                sq += x * x;
                in_range &= std::llabs(x) <= bound;
                minc += std::llabs(x);
                maxc += (d - std::llabs(x)) % 2 == 0 ? d : d - 1;
            }
            if (sorted && in_range && sum == p.s && sq == p.k + p.lambda * (d - 1) && minc <= k && k <= maxc)
                expected.insert(b);
            std::size_t i = 0;
            while (i < b.size() && b[i] == d) b[i++] = -d;
            if (i == b.size()) break;
            ++b[i];
        }
        std::set<std::vector<i64>> got;
        for (const auto& s : intersection_solutions(p, d, w)) got.insert(s.b);
        EXPECT_EQ(got, expected) << v << "," << k << "," << l << " d=" << d << " w=" << w;
    }
}

TEST(OrbitSearch, SporadicTableParameters)
{
    struct Case {
        i64 v, k, lambda, p, n;
    };
    for (const auto& c : std::vector<Case>{{19, 13, 2, 10, 3}, {19, 13, 6, 12, 1}, {20, 11, 2, 9, 2}, {55, 10, 1, 9, 1}}) {
        const auto rep = orbit_search(make_group({c.v}), c.k, c.lambda);
        EXPECT_EQ(rep.status, SearchStatus::exhaustive);
        ASSERT_FALSE(rep.sets_found.empty()) << c.v;
        for (const auto& d : rep.sets_found) {
            EXPECT_TRUE(verify(d).passed);
            EXPECT_EQ(static_cast<i64>(d.P.size()), c.p);
            EXPECT_EQ(static_cast<i64>(d.N.size()), c.n);
        }
    }
}

TEST(OrbitSearch, InfeasibleAndTrivial)
{
    const auto r = orbit_search(make_group({20}), 11, 3);
    EXPECT_EQ(r.status, SearchStatus::infeasible);
    EXPECT_TRUE(r.sets_found.empty());
    EXPECT_EQ(orbit_search(make_group({7}), 7, 7).status, SearchStatus::infeasible);
    EXPECT_EQ(orbit_search(make_group({7}), 7, 3).status, SearchStatus::infeasible);
}

TEST(OrbitSearch, ComplementOfPaleyIsFound)
{
    const auto rep = orbit_search(make_group({7}), 7, -1);
    EXPECT_EQ(keys_of(rep).count(canonical_form(complement_signed(paley_difference_set(7)))), 1u);
}

TEST(OrbitSearch, PruningDoesNotChangeResults)
{
    for (const auto& [v, k, l] : std::vector<std::array<i64, 3>>{{19, 13, 2}, {7, 7, -1}, {20, 11, 2}, {16, 6, 2}, {15, 7, 3}}) {
        const auto G = make_group({v});
        const auto full = orbit_search(G, k, l);
        SearchOptions off;
        off.prune_quotient = false;
        off.prune_diff = false;
        const auto bare = orbit_search(G, k, l, off);
        EXPECT_EQ(full.keys, bare.keys) << v << "," << k << "," << l;
        EXPECT_LE(full.nodes_explored, bare.nodes_explored);
    }
}

TEST(OrbitSearch, FrontierResumeCompletesTheRun)
{
    const auto G = make_group({19});
    const auto whole = orbit_search(G, 13, 2);
    SearchOptions small;
    small.max_nodes = 20;
    auto part = orbit_search(G, 13, 2, small);
    ASSERT_EQ(part.status, SearchStatus::partial);
    ASSERT_FALSE(part.frontier.empty());
    std::set<std::string> keys = keys_of(part);
    for (int round = 0; round < 1000 && part.status == SearchStatus::partial; ++round) {
        small.frontier = part.frontier;
        part = orbit_search(G, 13, 2, small);
        keys.merge(keys_of(part));
    }
    EXPECT_EQ(part.status, SearchStatus::exhaustive);
    EXPECT_EQ(keys, keys_of(whole));
}

TEST(OrbitSearch, ThreadCountDoesNotChangeResults)
{
    const auto G = make_group({19});
    SearchOptions one, four;
    four.threads = 4;
    EXPECT_EQ(orbit_search(G, 13, 2, one).keys, orbit_search(G, 13, 2, four).keys);
    const auto H = make_group({2, 3, 3});
    EXPECT_EQ(exhaustive_element_search(H, 13, 4, one).keys, exhaustive_element_search(H, 13, 4, four).keys);
}

TEST(ElementSearch, RediscoversNoncyclicSet)
{
    const auto rep = exhaustive_element_search(make_group({2, 3, 3}), 13, 4);
    EXPECT_EQ(rep.status, SearchStatus::exhaustive);
    EXPECT_EQ(keys_of(rep).count(canonical_form(noncyclic_18_13_4())), 1u);
    for (const auto& d : rep.sets_found) EXPECT_TRUE(verify(d).passed);
}

TEST(ElementSearch, CeilingEnforced)
{
    try {
        exhaustive_element_search(make_group({5, 5, 5}), 5, 0);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::precondition);
    }
}

// Every class found by brute force over all 3^v sign vectors is found by search, and nothing else.
TEST(Search, CompleteAgainstBruteForceSmallGroups)
{
    for (const auto& orders : std::vector<std::vector<long>>{{5}, {6}, {7}, {2, 4}, {8}, {3, 3}, {9}, {2, 2, 2}}) {
        const std::vector<i64> o(orders.begin(), orders.end());
        const auto G = make_group(o);
        std::map<std::pair<long, long>, std::set<std::string>> expected;
        for (const auto& hit : oracle::all_two_level(orders)) {
            if (is_excluded_trivial(G.order(), hit.k, hit.lambda)) continue;
            expected[{hit.k, hit.lambda}].insert(oracle_class_min(orders, hit.signs));
        }
        for (const auto& [kl, classes] : expected) {
            const auto r1 = orbit_search(G, kl.first, kl.second);
            const auto r2 = exhaustive_element_search(G, kl.first, kl.second);
            auto found = keys_of(r1);
            found.merge(keys_of(r2));
            EXPECT_EQ(found, classes) << G.literal() << " k=" << kl.first << " lambda=" << kl.second;
            EXPECT_EQ(keys_of(r2), classes) << G.literal() << " k=" << kl.first << " lambda=" << kl.second;
        }
    }
}

TEST(ResidueScan, QuarticHits)
{
    std::vector<i64> vs;
    for (const auto& h : residue_scan(4, 1000)) vs.push_back(h.v);
    EXPECT_EQ(vs, (std::vector<i64>{29, 61, 349, 509, 701}));
}

TEST(ResidueScan, EmptyForOtherPowers)
{
    for (i64 e : {3, 5, 6, 8, 12}) EXPECT_TRUE(residue_scan(e, 2000).empty()) << e;
}

TEST(ResidueScan, QuadraticCaseIsPaleySigned)
{
    std::vector<i64> expected;
    for (i64 v = 3; v <= 300; ++v)
        if (is_prime(v) && v % 4 == 3) expected.push_back(v);
    std::vector<i64> vs;
    for (const auto& h : residue_scan(2, 300)) {
        vs.push_back(h.v);
        EXPECT_EQ(h.params.lambda, (h.v + 1) / 4 - 2);
    }
    EXPECT_EQ(vs, expected);
}
