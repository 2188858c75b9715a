#pragma once

// Explicit signed difference set families. Every constructor verifies its
// output with the exact group-ring equation before returning it, and every
// result is normalized so that |P| >= |N|.

#include <algorithm>
#include <string>
#include <vector>

#include "sds/finite_field.hpp"
#include "sds/group.hpp"
#include "sds/signed_set.hpp"

namespace sds {

namespace detail {

inline SignedDiffSet finish(SignedDiffSet d, std::string family, std::vector<std::pair<std::string, i64>> params,
                            std::vector<FieldDescriptor> fields = {})
{
    d = normalize(std::move(d));
    d.provenance = Provenance{std::move(family), std::move(params), std::move(fields)};
    auto rep = verify(d);
    if (!rep.passed)
        throw Error(Errc::verification_failed, d.provenance.family + " construction failed to verify: " + rep.message);
    return d;
}

} // namespace detail

/// (v,k,lambda) difference set D -> (v, v, v - 4(k - lambda)) signed set with P = D, N = G \ D.
inline SignedDiffSet complement_signed(const SignedDiffSet& ds)
{
    if (!ds.N.empty()) throw Error(Errc::precondition, "complement_signed needs a difference set (N empty)");
    if (!verify(ds).passed) throw Error(Errc::verification_failed, "input is not a verified difference set");
    const i64 v = ds.v();
    const i64 n = ds.k() - ds.lambda;
    std::vector<GroupElement> complement;
    for (i64 r = 0; r < v; ++r) {
        auto g = ds.group.unrank(r);
        if (!std::binary_search(ds.P.begin(), ds.P.end(), g)) complement.push_back(std::move(g));
    }
    SignedDiffSet out(ds.group, ds.P, std::move(complement), v - 4 * n);
    auto fields = ds.provenance.fields;
    return detail::finish(std::move(out), "complement", {{"v", v}, {"k", ds.k()}, {"lambda", ds.lambda}},
                          std::move(fields));
}

/// Nonzero squares of GF(q), q = 3 mod 4: a (q, (q-1)/2, (q-3)/4) difference set.
inline SignedDiffSet paley_difference_set(i64 q)
{
    if (!prime_power(q)) throw Error(Errc::not_prime_power, std::to_string(q) + " is not a prime power");
    if (q % 4 != 3) throw Error(Errc::precondition, "Paley difference set needs q = 3 mod 4, got " + std::to_string(q));
    const auto F = make_field(q);
    std::vector<GroupElement> P;
    for (const auto& x : F.enumerate_elements())
        if (F.quadratic_character(x) == 1) P.push_back(F.to_group_element(x));
    SignedDiffSet d(F.additive_group(), std::move(P), {}, (q - 3) / 4);
    return detail::finish(std::move(d), "paley", {{"q", q}}, {F.descriptor()});
}

/// Squares minus nonsquares modulo an odd prime: (v, v-1, -1).
inline SignedDiffSet quadratic_residue_sds(i64 v)
{
    if (v < 3 || !is_prime(v)) throw Error(Errc::precondition, std::to_string(v) + " is not an odd prime");
    const auto F = make_field(v);
    std::vector<GroupElement> P, N;
    for (const auto& x : F.enumerate_elements()) {
        int chi = F.quadratic_character(x);
        if (chi == 1) P.push_back(F.to_group_element(x));
        if (chi == -1) N.push_back(F.to_group_element(x));
    }
    SignedDiffSet d(F.additive_group(), std::move(P), std::move(N), -1);
    return detail::finish(std::move(d), "qr", {{"v", v}});
}

/// Paley set plus N = {0}: (4n-1, 2n, n-2) for q = 4n-1 a prime power.
inline SignedDiffSet paley_signed_sds(i64 q)
{
    auto ds = paley_difference_set(q);
    const i64 n = (q + 1) / 4;
    SignedDiffSet d(ds.group, ds.P, {ds.group.identity()}, n - 2);
    return detail::finish(std::move(d), "paley-signed", {{"q", q}}, ds.provenance.fields);
}

/// Fourth-power residues with N = {0} for primes v = 13 mod 16, v = 25 + 4y^2, y odd:
/// a (v, (v+3)/4, (v-13)/16) signed set.
inline SignedDiffSet quartic_residue_sds(i64 v)
{
    if (!is_prime(v)) throw Error(Errc::precondition, std::to_string(v) + " is not prime");
    if (v % 16 != 13) throw Error(Errc::precondition, std::to_string(v) + " is not 13 mod 16");
    const i64 rest = v - 25;
    auto y = rest >= 0 && rest % 4 == 0 ? exact_sqrt(rest / 4) : std::nullopt;
    if (!y) throw Error(Errc::precondition, std::to_string(v) + " is not of the form 25 + 4y^2");
    if (*y % 2 == 0) throw Error(Errc::precondition, "y = " + std::to_string(*y) + " is even");
    const AbelianGroup G({v});
    std::vector<GroupElement> P;
    for (i64 r : power_residues(v, 4)) P.push_back(GroupElement{{r}});
    SignedDiffSet d(G, std::move(P), {G.identity()}, (v - 13) / 16);
    return detail::finish(std::move(d), "quartic", {{"v", v}, {"y", *y}});
}

/// The (4m^2-9, 2m^2-1, m^2-1) set in GF(q) + GF(r), q = 2m-3, r = 2m+3:
/// P = {(x,y): chi(x)chi(y) = 1} u {(0,y): y != 0}, N = {(0,0)}.
inline SignedDiffSet prime_pair_sds(i64 m)
{
    if (m < 3) throw Error(Errc::precondition, "prime-pair construction needs m >= 3");
    const i64 q = 2 * m - 3, r = 2 * m + 3;
    if (!prime_power(q)) throw Error(Errc::not_prime_power, "q = " + std::to_string(q) + " is not a prime power");
    if (!prime_power(r)) throw Error(Errc::not_prime_power, "r = " + std::to_string(r) + " is not a prime power");
    const auto Fq = make_field(q);
    const auto Fr = make_field(r);
    std::vector<i64> orders(static_cast<std::size_t>(Fq.degree()), Fq.p());
    orders.insert(orders.end(), static_cast<std::size_t>(Fr.degree()), Fr.p());
    const AbelianGroup G(orders);
    auto join = [](const FieldElement& x, const FieldElement& y) {
        GroupElement g{x.coeffs};
        g.coords.insert(g.coords.end(), y.coeffs.begin(), y.coeffs.end());
        return g;
    };
    std::vector<GroupElement> P;
    const auto xs = Fq.enumerate_elements();
    const auto ys = Fr.enumerate_elements();
    for (const auto& x : xs) {
        const int cx = Fq.quadratic_character(x);
        for (const auto& y : ys) {
            const int cy = Fr.quadratic_character(y);
            if (cx * cy == 1 || (cx == 0 && cy != 0)) P.push_back(join(x, y));
        }
    }
    const i64 n = m * m;
    SignedDiffSet d(G, std::move(P), {G.identity()}, n - 1);
    return detail::finish(std::move(d), "prime-pair", {{"m", m}, {"q", q}, {"r", r}},
                          {Fq.descriptor(), Fr.descriptor()});
}

/// The (18,13,4) set in Z_2 x Z_3 x Z_3.
inline SignedDiffSet noncyclic_18_13_4()
{
    const AbelianGroup G({2, 3, 3});
    std::vector<GroupElement> P;
    for (i64 x = 0; x < 3; ++x) {
        P.push_back({{0, x, 1}});
        P.push_back({{0, x, 2}});
        P.push_back({{1, 2, x}});
    }
    P.push_back({{1, 0, 1}});
    P.push_back({{1, 1, 0}});
    std::vector<GroupElement> N{{{1, 0, 0}}, {{1, 1, 1}}};
    SignedDiffSet d(G, std::move(P), std::move(N), 4);
    return detail::finish(std::move(d), "noncyclic-18-13-4", {});
}

} // namespace sds
