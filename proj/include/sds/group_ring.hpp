#pragma once

// Exact integer group ring Z[G]. Coefficients are indexed by element rank.

#include <cstdlib>
#include <string>
#include <vector>

#include "sds/arith.hpp"
#include "sds/group.hpp"

namespace sds {

struct GroupRingElement {
    AbelianGroup group;
    std::vector<i64> coeffs;

    GroupRingElement() : GroupRingElement(AbelianGroup::trivial()) {}
    explicit GroupRingElement(AbelianGroup g) : group(std::move(g)), coeffs(group.rank_count(), 0) {}
    GroupRingElement(AbelianGroup g, std::vector<i64> c) : group(std::move(g)), coeffs(std::move(c))
    {
        if (coeffs.size() != group.rank_count())
            throw Error(Errc::group_mismatch, "coefficient vector length does not match group order");
    }

    i64 operator[](std::size_t r) const { return coeffs[r]; }
    i64 identity_coeff() const { return coeffs.front(); }

    bool operator==(const GroupRingElement& o) const { return group == o.group && coeffs == o.coeffs; }

    i64 sum() const
    {
        i64 s = 0;
        for (i64 c : coeffs) s = checked_add(s, c);
        return s;
    }

    /// Number of nonzero coefficients.
    i64 support_size() const
    {
        i64 k = 0;
        for (i64 c : coeffs) k += c != 0;
        return k;
    }
};

inline GroupRingElement from_signed_set(const AbelianGroup& group, const std::vector<GroupElement>& P,
                                        const std::vector<GroupElement>& N)
{
    GroupRingElement a(group);
    for (const auto& g : P) a.coeffs[static_cast<std::size_t>(group.rank(g))] = 1;
    for (const auto& g : N) {
        auto& c = a.coeffs[static_cast<std::size_t>(group.rank(g))];
        if (c == 1) throw Error(Errc::not_disjoint, "element " + AbelianGroup::to_string(g) + " is in both P and N");
        c = -1;
    }
    return a;
}

/// c[g] = sum_h a[h] b[g-h]; O(v^2) with overflow checks.
inline GroupRingElement convolve(const GroupRingElement& a, const GroupRingElement& b)
{
    if (!(a.group == b.group)) throw Error(Errc::group_mismatch, a.group.literal() + " vs " + b.group.literal());
    const auto& G = a.group;
    GroupRingElement c(G);
    const i64 v = G.order();
    for (i64 h = 0; h < v; ++h) {
        i64 ah = a.coeffs[static_cast<std::size_t>(h)];
        if (ah == 0) continue;
        for (i64 x = 0; x < v; ++x) {
            i64 bx = b.coeffs[static_cast<std::size_t>(x)];
            if (bx == 0) continue;
            auto& slot = c.coeffs[static_cast<std::size_t>(G.add_ranks(h, x))];
            slot = checked_add(slot, checked_mul(ah, bx));
        }
    }
    return c;
}

/// Coefficient of g moves to -g.
inline GroupRingElement involution(const GroupRingElement& a)
{
    GroupRingElement r(a.group);
    for (i64 g = 0; g < a.group.order(); ++g)
        r.coeffs[static_cast<std::size_t>(a.group.neg_rank(g))] = a.coeffs[static_cast<std::size_t>(g)];
    return r;
}

/// a * a^(-1).
inline GroupRingElement difference_spectrum(const GroupRingElement& a) { return convolve(a, involution(a)); }

struct EquationViolation {
    i64 rank;
    i64 actual;
    i64 expected;
    bool operator==(const EquationViolation&) const = default;
};

struct EquationReport {
    bool holds = false;
    i64 k = 0;
    i64 lambda = 0;
    GroupRingElement spectrum;
    std::vector<EquationViolation> violations;
};

/// Checks a a^(-1) = (k - lambda) + lambda G with k taken from the support.
inline EquationReport check_sds_equation(const GroupRingElement& a, i64 lambda)
{
    for (std::size_t r = 0; r < a.coeffs.size(); ++r)
        if (std::llabs(a.coeffs[r]) > 1)
            throw Error(Errc::not_a_signed_set,
                        "coefficient " + std::to_string(a.coeffs[r]) + " at rank " + std::to_string(r));
    EquationReport rep{false, a.support_size(), lambda, difference_spectrum(a), {}};
    if (rep.spectrum.coeffs[0] != rep.k) rep.violations.push_back({0, rep.spectrum.coeffs[0], rep.k});
    for (std::size_t r = 1; r < rep.spectrum.coeffs.size(); ++r)
        if (rep.spectrum.coeffs[r] != lambda)
            rep.violations.push_back({static_cast<i64>(r), rep.spectrum.coeffs[r], lambda});
    rep.holds = rep.violations.empty();
    return rep;
}

/// Coset-sum projection onto the quotient described by q.
inline GroupRingElement project_ring_element(const GroupRingElement& a, const QuotientData& q)
{
    if (q.projection.size() != a.group.rank_count())
        throw Error(Errc::group_mismatch, "quotient was not built from group " + a.group.literal());
    GroupRingElement r(q.quotient);
    for (std::size_t x = 0; x < a.coeffs.size(); ++x) {
        auto& slot = r.coeffs[static_cast<std::size_t>(q.projection[x])];
        slot = checked_add(slot, a.coeffs[x]);
    }
    return r;
}

} // namespace sds
