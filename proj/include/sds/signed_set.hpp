#pragma once

// Signed difference sets D = P - N: parameter feasibility, verification,
// the symmetry operations that preserve the defining equation, canonical
// keys for deduplication, and the periodic autocorrelation view.

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sds/arith.hpp"
#include "sds/group.hpp"
#include "sds/group_ring.hpp"

namespace sds {

struct SdsParams {
    i64 v = 0;
    i64 k = 0;
    i64 lambda = 0;
    i64 n = 0;       // k - lambda
    i64 s = 0;       // sqrt(lambda (v-1) + k) = |P| - |N|
    i64 p_size = 0;  // (k + s) / 2
    i64 n_size = 0;  // (k - s) / 2

    bool operator==(const SdsParams&) const = default;
};

enum class Infeasibility {
    none,
    out_of_range,   // v < 1, k < 0 or k > v
    non_square,     // lambda (v-1) + k is not a perfect square
    parity,         // k + s is odd
    lambda_bound,   // lambda < -1
    negative_n,     // s > k, so |N| would be negative
};

inline const char* infeasibility_name(Infeasibility r)
{
    switch (r) {
    case Infeasibility::none: return "feasible";
    case Infeasibility::out_of_range: return "out-of-range";
    case Infeasibility::non_square: return "non-square";
    case Infeasibility::parity: return "parity";
    case Infeasibility::lambda_bound: return "lambda-bound";
    case Infeasibility::negative_n: return "negative-|N|";
    }
    return "?";
}

struct ParamsVerdict {
    std::optional<SdsParams> params;
    Infeasibility reason = Infeasibility::none;
    std::string detail;

    bool feasible() const noexcept { return params.has_value(); }
};

inline ParamsVerdict derive_params(i64 v, i64 k, i64 lambda)
{
    ParamsVerdict out;
    if (v < 1 || k < 0 || k > v) {
        out.reason = Infeasibility::out_of_range;
        out.detail = "need v >= 1 and 0 <= k <= v";
        return out;
    }
    const i64 radicand = checked_add(checked_mul(lambda, v - 1), k);
    auto s = exact_sqrt(radicand);
    if (!s) {
        out.reason = Infeasibility::non_square;
        out.detail = "lambda(v-1)+k = " + std::to_string(radicand) + " is not a perfect square";
        return out;
    }
    if ((k + *s) % 2 != 0) {
        out.reason = Infeasibility::parity;
        out.detail = "k+s = " + std::to_string(k + *s) + " is odd";
        return out;
    }
    if (lambda < -1) {
        out.reason = Infeasibility::lambda_bound;
        out.detail = "lambda = " + std::to_string(lambda) + " < -1";
        return out;
    }
    if (*s > k) {
        out.reason = Infeasibility::negative_n;
        out.detail = "s = " + std::to_string(*s) + " exceeds k = " + std::to_string(k);
        return out;
    }
    out.params = SdsParams{v, k, lambda, k - lambda, *s, (k + *s) / 2, (k - *s) / 2};
    return out;
}

/// The two trivial shapes never reported: (v,v,v) and (v,v,v-4).
inline bool is_excluded_trivial(i64 v, i64 k, i64 lambda) { return k == v && (lambda == v || lambda == v - 4); }

/// Every feasible (v,k,lambda) with 2 <= v <= max_v and k >= 1, sorted by (v,k,lambda).
/// With dedup_complements, a triple with lambda > v/2 is dropped when the
/// complementary triple (v, v-k, v-2k+lambda) is also listed.
inline std::vector<SdsParams> enumerate_feasible(i64 max_v, bool dedup_complements = false)
{
    std::vector<SdsParams> out;
    for (i64 v = 2; v <= max_v; ++v) {
        for (i64 k = 1; k <= v; ++k) {
            // s^2 = lambda (v-1) + k with 0 <= s <= k bounds lambda on both sides.
            const i64 lo = -1;
            const i64 hi = (k * k - k) / (v - 1);
            for (i64 lambda = lo; lambda <= hi; ++lambda) {
                if (is_excluded_trivial(v, k, lambda)) continue;
                auto verdict = derive_params(v, k, lambda);
                if (verdict.feasible()) out.push_back(*verdict.params);
            }
        }
    }
    if (dedup_complements) {
        auto listed = [&](i64 v, i64 k, i64 l) {
            return std::any_of(out.begin(), out.end(),
                               [&](const SdsParams& p) { return p.v == v && p.k == k && p.lambda == l; });
        };
        std::vector<SdsParams> kept;
        for (const auto& p : out)
            if (!(2 * p.lambda > p.v && listed(p.v, p.v - p.k, p.v - 2 * p.k + p.lambda))) kept.push_back(p);
        out = std::move(kept);
    }
    return out;
}

struct FieldDescriptor {
    i64 p = 0;
    int k = 0;
    std::vector<i64> modulus;  // constant term first, monic
    bool operator==(const FieldDescriptor&) const = default;
};

/// Where a set came from; carried into catalog records.
struct Provenance {
    std::string family;
    std::vector<std::pair<std::string, i64>> parameters;
    std::vector<FieldDescriptor> fields;
};

struct SignedDiffSet {
    AbelianGroup group;
    std::vector<GroupElement> P;
    std::vector<GroupElement> N;
    i64 lambda = 0;
    Provenance provenance;

    SignedDiffSet() = default;
    SignedDiffSet(AbelianGroup g, std::vector<GroupElement> p, std::vector<GroupElement> n, i64 l)
        : group(std::move(g)), P(std::move(p)), N(std::move(n)), lambda(l)
    {
        tidy();
    }

    i64 v() const { return group.order(); }
    i64 k() const { return static_cast<i64>(P.size() + N.size()); }
    i64 s() const { return static_cast<i64>(P.size()) - static_cast<i64>(N.size()); }

    GroupRingElement ring() const { return from_signed_set(group, P, N); }

    /// Sorts P and N by rank and rejects duplicates or foreign elements.
    void tidy()
    {
        auto fix = [&](std::vector<GroupElement>& xs) {
            for (const auto& x : xs) group.require(x);
            std::sort(xs.begin(), xs.end());
            if (std::adjacent_find(xs.begin(), xs.end()) != xs.end())
                throw Error(Errc::not_a_signed_set, "repeated element");
        };
        fix(P);
        fix(N);
    }

    static SignedDiffSet from_ring(const GroupRingElement& a, i64 lambda)
    {
        std::vector<GroupElement> p, n;
        for (i64 r = 0; r < a.group.order(); ++r) {
            i64 c = a.coeffs[static_cast<std::size_t>(r)];
            if (c == 1) p.push_back(a.group.unrank(r));
            else if (c == -1) n.push_back(a.group.unrank(r));
            else if (c != 0) throw Error(Errc::not_a_signed_set, "coefficient " + std::to_string(c));
        }
        return SignedDiffSet(a.group, std::move(p), std::move(n), lambda);
    }
};

struct VerifyReport {
    bool passed = false;
    EquationReport equation;
    ParamsVerdict params;
    bool params_consistent = false;  // derived sizes agree with |P| and |N|
    std::string message;
};

inline VerifyReport verify(const SignedDiffSet& d)
{
    VerifyReport rep;
    rep.equation = check_sds_equation(d.ring(), d.lambda);
    rep.params = derive_params(d.v(), d.k(), d.lambda);
    if (rep.params.feasible()) {
        const auto& p = *rep.params.params;
        const i64 big = std::max<i64>(static_cast<i64>(d.P.size()), static_cast<i64>(d.N.size()));
        const i64 small = std::min<i64>(static_cast<i64>(d.P.size()), static_cast<i64>(d.N.size()));
        rep.params_consistent = big == p.p_size && small == p.n_size && std::llabs(d.s()) == p.s;
    }
    rep.passed = rep.equation.holds && rep.params_consistent;
    if (rep.passed) {
        rep.message = "verified";
    } else if (!rep.equation.holds) {
        rep.message = std::to_string(rep.equation.violations.size()) + " spectrum coefficient(s) differ from the claim";
    } else {
        rep.message = "parameter inconsistency: " + (rep.params.feasible() ? std::string("|P|,|N| mismatch") : rep.params.detail);
    }
    return rep;
}

/// Swaps P and N when |P| < |N|; negation preserves the equation.
inline SignedDiffSet normalize(SignedDiffSet d)
{
    if (d.P.size() < d.N.size()) std::swap(d.P, d.N);
    return d;
}

inline SignedDiffSet translate(const SignedDiffSet& d, const GroupElement& g)
{
    auto shift = [&](const std::vector<GroupElement>& xs) {
        std::vector<GroupElement> out;
        for (const auto& x : xs) out.push_back(d.group.add(x, g));
        return out;
    };
    SignedDiffSet r(d.group, shift(d.P), shift(d.N), d.lambda);
    r.provenance = d.provenance;
    return r;
}

inline SignedDiffSet apply_unit(const SignedDiffSet& d, i64 t)
{
    const i64 e = d.group.exponent();
    if (std::gcd(mod(t, e), e) != 1)
        throw Error(Errc::not_a_unit, std::to_string(t) + " is not a unit modulo " + std::to_string(e));
    auto scale = [&](const std::vector<GroupElement>& xs) {
        std::vector<GroupElement> out;
        for (const auto& x : xs) out.push_back(d.group.scale(t, x));
        return out;
    };
    SignedDiffSet r(d.group, scale(d.P), scale(d.N), d.lambda);
    r.provenance = d.provenance;
    return r;
}

namespace detail {

inline std::string key_of(const std::vector<i64>& coeffs)
{
    std::string s(coeffs.size(), '1');
    for (std::size_t i = 0; i < coeffs.size(); ++i) s[i] = static_cast<char>('1' + coeffs[i]);
    return s;
}

} // namespace detail

/// Canonical key of a {-1,0,1} coefficient vector: the least image over all
/// maps x -> t*x + g (t a unit) and, when the sum is zero, negation. Each
/// coefficient is written as one digit, '0' for -1, '1' for 0, '2' for +1,
/// so byte order is coefficient order.
inline std::string canonical_key(const AbelianGroup& group, std::vector<i64> coeffs)
{
    i64 s = std::accumulate(coeffs.begin(), coeffs.end(), i64{0});
    if (s < 0)
        for (auto& c : coeffs) c = -c;
    const i64 v = group.order();
    const i64 e = group.exponent();
    std::vector<std::vector<i64>> bases;
    bases.push_back(coeffs);
    if (s == 0) {
        auto neg = coeffs;
        for (auto& c : neg) c = -c;
        bases.push_back(std::move(neg));
    }
    std::vector<i64> best, scaled(static_cast<std::size_t>(v)), cand(static_cast<std::size_t>(v));
    for (const auto& base : bases) {
        for (i64 t = 1; t <= std::max<i64>(e - 1, 1); ++t) {
            if (std::gcd(t, e) != 1) continue;
            for (i64 x = 0; x < v; ++x) scaled[static_cast<std::size_t>(group.scale_rank(t, x))] = base[static_cast<std::size_t>(x)];
            for (i64 g = 0; g < v; ++g) {
                // cand[y] = scaled[y - g]; compare lazily against best.
                bool better = best.empty();
                bool decided = better;
                for (i64 y = 0; y < v; ++y) {
                    cand[static_cast<std::size_t>(y)] = scaled[static_cast<std::size_t>(group.sub_ranks(y, g))];
                    if (!decided) {
                        if (cand[static_cast<std::size_t>(y)] < best[static_cast<std::size_t>(y)]) {
                            better = decided = true;
                        } else if (cand[static_cast<std::size_t>(y)] > best[static_cast<std::size_t>(y)]) {
                            decided = true;
                            break;
                        }
                    }
                }
                if (better) best = cand;
            }
        }
    }
    return detail::key_of(best);
}

inline std::string canonical_form(const SignedDiffSet& d) { return canonical_key(d.group, d.ring().coeffs); }

/// theta(tau) = sum_t s_{t+tau} s_t over a cyclic group.
inline std::vector<i64> autocorrelation(const SignedDiffSet& d)
{
    if (!d.group.is_cyclic())
        throw Error(Errc::not_cyclic, "autocorrelation needs a cyclic group, got " + d.group.literal());
    const auto seq = d.ring().coeffs;
    const i64 v = d.v();
    std::vector<i64> theta(static_cast<std::size_t>(v), 0);
    for (i64 tau = 0; tau < v; ++tau) {
        i64 acc = 0;
        for (i64 t = 0; t < v; ++t) acc += seq[static_cast<std::size_t>((t + tau) % v)] * seq[static_cast<std::size_t>(t)];
        theta[static_cast<std::size_t>(tau)] = acc;
    }
    return theta;
}

} // namespace sds
