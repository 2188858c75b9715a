#pragma once

// Finite abelian groups Z_{m1} x ... x Z_{mr}, stored with the cyclic factor
// orders exactly as supplied. Elements are coordinate vectors; every element
// also has a mixed-radix rank in [0, v) with the first coordinate most
// significant, so rank order equals lexicographic coordinate order.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sds/arith.hpp"
#include "sds/error.hpp"

namespace sds {

struct GroupElement {
    std::vector<i64> coords;

    auto operator<=>(const GroupElement&) const = default;
    bool operator==(const GroupElement&) const = default;
};

class AbelianGroup {
public:
    AbelianGroup() = default;

    explicit AbelianGroup(std::vector<i64> orders) : orders_(std::move(orders))
    {
        if (orders_.empty()) throw Error(Errc::invalid_group, "group needs at least one cyclic factor");
        for (i64 m : orders_)
            if (m < 2) throw Error(Errc::invalid_group, "cyclic factor order " + std::to_string(m) + " < 2");
        init();
    }

    /// The order-1 group; only produced as the quotient of a group by itself.
    static AbelianGroup trivial()
    {
        AbelianGroup g;
        g.init();
        return g;
    }

    const std::vector<i64>& orders() const noexcept { return orders_; }
    i64 order() const noexcept { return v_; }
    i64 exponent() const noexcept { return exponent_; }
    std::size_t rank_count() const noexcept { return static_cast<std::size_t>(v_); }
    std::size_t dimension() const noexcept { return orders_.size(); }
    bool is_cyclic() const noexcept { return orders_.size() == 1; }
    bool is_trivial() const noexcept { return orders_.empty(); }

    bool operator==(const AbelianGroup& o) const { return orders_ == o.orders_; }

    /// "2x3x3" style literal.
    std::string literal() const
    {
        if (orders_.empty()) return "1";
        std::string s;
        for (std::size_t i = 0; i < orders_.size(); ++i) {
            if (i) s += 'x';
            s += std::to_string(orders_[i]);
        }
        return s;
    }

    bool contains(const GroupElement& g) const
    {
        if (g.coords.size() != orders_.size()) return false;
        for (std::size_t i = 0; i < orders_.size(); ++i)
            if (g.coords[i] < 0 || g.coords[i] >= orders_[i]) return false;
        return true;
    }

    void require(const GroupElement& g) const
    {
        if (!contains(g)) throw Error(Errc::out_of_range, "element " + to_string(g) + " not in group " + literal());
    }

    GroupElement identity() const { return GroupElement{std::vector<i64>(orders_.size(), 0)}; }

    i64 rank(const GroupElement& g) const
    {
        require(g);
        i64 r = 0;
        for (std::size_t i = 0; i < orders_.size(); ++i) r = r * orders_[i] + g.coords[i];
        return r;
    }

    GroupElement unrank(i64 r) const
    {
        if (r < 0 || r >= v_)
            throw Error(Errc::out_of_range, "rank " + std::to_string(r) + " outside [0, " + std::to_string(v_) + ")");
        GroupElement g{std::vector<i64>(orders_.size())};
        for (std::size_t i = orders_.size(); i-- > 0;) {
            g.coords[i] = r % orders_[i];
            r /= orders_[i];
        }
        return g;
    }

    GroupElement add(const GroupElement& a, const GroupElement& b) const
    {
        require(a);
        require(b);
        GroupElement c{std::vector<i64>(orders_.size())};
        for (std::size_t i = 0; i < orders_.size(); ++i) c.coords[i] = (a.coords[i] + b.coords[i]) % orders_[i];
        return c;
    }

    GroupElement neg(const GroupElement& a) const
    {
        require(a);
        GroupElement c{std::vector<i64>(orders_.size())};
        for (std::size_t i = 0; i < orders_.size(); ++i) c.coords[i] = (orders_[i] - a.coords[i]) % orders_[i];
        return c;
    }

    /// g -> t*g, coordinatewise; t is any integer.
    GroupElement scale(i64 t, const GroupElement& a) const
    {
        require(a);
        GroupElement c{std::vector<i64>(orders_.size())};
        for (std::size_t i = 0; i < orders_.size(); ++i)
            c.coords[i] = static_cast<i64>(static_cast<__int128>(mod(t, orders_[i])) * a.coords[i] % orders_[i]);
        return c;
    }

    // Rank-level arithmetic for hot loops. Inputs are trusted to be in range.

    i64 add_ranks(i64 a, i64 b) const
    {
        if (orders_.size() == 1) {
            i64 s = a + b;
            return s >= v_ ? s - v_ : s;
        }
        i64 r = 0;
        for (std::size_t i = 0; i < orders_.size(); ++i) {
            i64 ca = (a / strides_[i]) % orders_[i];
            i64 cb = (b / strides_[i]) % orders_[i];
            i64 c = ca + cb;
            if (c >= orders_[i]) c -= orders_[i];
            r += c * strides_[i];
        }
        return r;
    }

    i64 sub_ranks(i64 a, i64 b) const
    {
        if (orders_.size() == 1) {
            i64 s = a - b;
            return s < 0 ? s + v_ : s;
        }
        i64 r = 0;
        for (std::size_t i = 0; i < orders_.size(); ++i) {
            i64 ca = (a / strides_[i]) % orders_[i];
            i64 cb = (b / strides_[i]) % orders_[i];
            i64 c = ca - cb;
            if (c < 0) c += orders_[i];
            r += c * strides_[i];
        }
        return r;
    }

    i64 neg_rank(i64 a) const { return sub_ranks(0, a); }

    i64 scale_rank(i64 t, i64 a) const
    {
        i64 r = 0;
        for (std::size_t i = 0; i < orders_.size(); ++i) {
            i64 ca = (a / strides_[i]) % orders_[i];
            r += static_cast<i64>(static_cast<__int128>(mod(t, orders_[i])) * ca % orders_[i]) * strides_[i];
        }
        return r;
    }

    /// Additive order of the element with the given rank.
    i64 element_order(i64 a) const
    {
        i64 l = 1;
        for (std::size_t i = 0; i < orders_.size(); ++i) {
            i64 c = (a / strides_[i]) % orders_[i];
            i64 o = orders_[i] / std::gcd(orders_[i], c);
            l = l / std::gcd(l, o) * o;
        }
        return l;
    }

    static std::string to_string(const GroupElement& g)
    {
        std::string s = "(";
        for (std::size_t i = 0; i < g.coords.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(g.coords[i]);
        }
        return s + ")";
    }

private:
    void init()
    {
        v_ = 1;
        for (i64 m : orders_) v_ = checked_mul(v_, m);
        exponent_ = lcm_of(orders_);
        strides_.assign(orders_.size(), 1);
        for (std::size_t i = orders_.size(); i-- > 1;) strides_[i - 1] = strides_[i] * orders_[i];
    }

    std::vector<i64> orders_;
    std::vector<i64> strides_;
    i64 v_ = 1;
    i64 exponent_ = 1;
};

inline AbelianGroup make_group(const std::vector<i64>& orders) { return AbelianGroup(orders); }

/// Parses "19" or "2x3x3".
inline AbelianGroup parse_group_literal(const std::string& text)
{
    std::vector<i64> orders;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, 'x')) {
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
            throw Error(Errc::invalid_group, "bad group literal '" + text + "'");
        orders.push_back(std::stoll(part));
    }
    return AbelianGroup(orders);
}

inline i64 element_rank(const AbelianGroup& g, const GroupElement& e) { return g.rank(e); }
inline GroupElement element_unrank(const AbelianGroup& g, i64 r) { return g.unrank(r); }
inline GroupElement elt_add(const AbelianGroup& g, const GroupElement& a, const GroupElement& b) { return g.add(a, b); }
inline GroupElement elt_neg(const AbelianGroup& g, const GroupElement& a) { return g.neg(a); }
inline GroupElement elt_scale(const AbelianGroup& g, i64 t, const GroupElement& a) { return g.scale(t, a); }

/// Coset projection G -> G/K for K generated by a list of elements.
struct QuotientData {
    AbelianGroup quotient;           // order w; trivial() when K = G
    std::vector<i64> projection;     // parent rank -> quotient rank
    i64 kernel_order = 1;            // d = |K|
    std::vector<i64> kernel;         // sorted ranks of K

    i64 w() const noexcept { return quotient.order(); }
};

namespace detail {

/// Sorted ranks of the subgroup generated by `gens` (closure under addition).
inline std::vector<i64> subgroup_closure(const AbelianGroup& g, const std::vector<i64>& gens)
{
    std::vector<char> in(g.rank_count(), 0);
    std::vector<i64> members{0};
    in[0] = 1;
    for (i64 gen : gens) {
        // K <- K + <gen>: keep adding gen to the newest layer until nothing new appears.
        std::vector<i64> layer(members.begin(), members.end());
        while (true) {
            std::vector<i64> next;
            for (i64 m : layer) {
                i64 x = g.add_ranks(m, gen);
                if (!in[static_cast<std::size_t>(x)]) {
                    in[static_cast<std::size_t>(x)] = 1;
                    next.push_back(x);
                }
            }
            if (next.empty()) break;
            members.insert(members.end(), next.begin(), next.end());
            layer = std::move(next);
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

} // namespace detail

/// Quotient of `group` by the subgroup generated by `generators`. The quotient's
/// cyclic structure is recovered by repeatedly splitting off a cyclic factor of
/// maximal order in what remains.
inline QuotientData quotient_by_subgroup(const AbelianGroup& group, const std::vector<GroupElement>& generators)
{
    std::vector<i64> gens;
    for (const auto& e : generators) gens.push_back(group.rank(e));
    QuotientData out;
    out.kernel = detail::subgroup_closure(group, gens);
    out.kernel_order = static_cast<i64>(out.kernel.size());

    const std::size_t v = group.rank_count();
    std::vector<i64> coset(v, -1);
    std::vector<i64> reps;
    for (std::size_t x = 0; x < v; ++x) {
        if (coset[x] >= 0) continue;
        i64 id = static_cast<i64>(reps.size());
        reps.push_back(static_cast<i64>(x));
        for (i64 k : out.kernel) coset[static_cast<std::size_t>(group.add_ranks(static_cast<i64>(x), k))] = id;
    }
    const std::size_t w = reps.size();
    if (w == 1) {
        out.quotient = AbelianGroup::trivial();
        out.projection.assign(v, 0);
        return out;
    }

    // Coset arithmetic on coset ids.
    auto cadd = [&](i64 a, i64 b) { return coset[static_cast<std::size_t>(group.add_ranks(reps[a], reps[b]))]; };
    auto cmul = [&](i64 m, i64 a) {
        i64 r = 0;
        for (i64 i = 0; i < m; ++i) r = cadd(r, a);
        return r;
    };

    // span[c] = true if coset c lies in S = <chosen generators>.
    std::vector<char> span(w, 0);
    span[0] = 1;
    std::vector<i64> span_list{0};
    std::vector<i64> factor_gens, factor_orders;
    while (span_list.size() < w) {
        // Element of maximal order in Q/S.
        i64 best = -1, best_ord = 0;
        for (std::size_t c = 0; c < w; ++c) {
            if (span[c]) continue;
            i64 m = 1;
            i64 cur = static_cast<i64>(c);
            while (!span[static_cast<std::size_t>(cur)]) {
                cur = cadd(cur, static_cast<i64>(c));
                ++m;
            }
            if (m > best_ord) {
                best_ord = m;
                best = static_cast<i64>(c);
            }
        }
        // Lift with the same order in Q; one exists because S is a direct summand.
        i64 lift = -1;
        for (i64 s : span_list) {
            i64 cand = cadd(best, s);
            if (cmul(best_ord, cand) == 0) {
                lift = cand;
                break;
            }
        }
        if (lift < 0) throw Error(Errc::precondition, "quotient decomposition failed");
        factor_gens.push_back(lift);
        factor_orders.push_back(best_ord);
        std::vector<i64> grown;
        for (i64 s : span_list) {
            i64 cur = s;
            for (i64 j = 0; j < best_ord; ++j) {
                if (!span[static_cast<std::size_t>(cur)]) {
                    span[static_cast<std::size_t>(cur)] = 1;
                    grown.push_back(cur);
                }
                cur = cadd(cur, lift);
            }
        }
        span_list.insert(span_list.end(), grown.begin(), grown.end());
    }

    out.quotient = AbelianGroup(factor_orders);
    // Coordinates of each coset in terms of the chosen generators.
    std::vector<i64> coset_to_qrank(w, -1);
    for (i64 r = 0; r < out.quotient.order(); ++r) {
        GroupElement c = out.quotient.unrank(r);
        i64 id = 0;
        for (std::size_t i = 0; i < factor_gens.size(); ++i) id = cadd(id, cmul(c.coords[i], factor_gens[i]));
        coset_to_qrank[static_cast<std::size_t>(id)] = r;
    }
    out.projection.resize(v);
    for (std::size_t x = 0; x < v; ++x) out.projection[x] = coset_to_qrank[static_cast<std::size_t>(coset[x])];
    return out;
}

/// Orbits of g -> t*g, each sorted ascending, listed by least member.
inline std::vector<std::vector<i64>> multiplier_orbits(const AbelianGroup& group, i64 t)
{
    if (std::gcd(mod(t, group.exponent()), group.exponent()) != 1)
        throw Error(Errc::not_a_unit, std::to_string(t) + " is not a unit modulo " + std::to_string(group.exponent()));
    std::vector<char> seen(group.rank_count(), 0);
    std::vector<std::vector<i64>> orbits;
    for (i64 x = 0; x < group.order(); ++x) {
        if (seen[static_cast<std::size_t>(x)]) continue;
        std::vector<i64> orbit;
        i64 cur = x;
        while (!seen[static_cast<std::size_t>(cur)]) {
            seen[static_cast<std::size_t>(cur)] = 1;
            orbit.push_back(cur);
            cur = group.scale_rank(t, cur);
        }
        std::sort(orbit.begin(), orbit.end());
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

struct UnitOrbitCount {
    i64 t;
    std::size_t orbit_count;
    bool operator==(const UnitOrbitCount&) const = default;
};

inline std::vector<UnitOrbitCount> units_with_orbit_structure(const AbelianGroup& group)
{
    std::vector<UnitOrbitCount> out;
    for (i64 t = 1; t < group.exponent() || (group.exponent() == 1 && t == 1); ++t) {
        if (std::gcd(t, group.exponent()) != 1) continue;
        out.push_back({t, multiplier_orbits(group, t).size()});
        if (group.exponent() == 1) break;
    }
    return out;
}

} // namespace sds
