#pragma once

// Multiplier computation, intersection numbers, and exhaustive searches for
// signed difference sets.
//
// The searches assign a sign in {-1, 0, +1} to each cell of a partition of
// the group (multiplier orbits, or single elements) by depth-first search.
// A branch is cut when
//   * the |P| and |N| budgets can no longer be met exactly by the remaining
//     cells (subset-sum reachability on cell sizes),
//   * some difference count is further from lambda than the undecided
//     elements can still move it (each nonzero element touches at most two
//     ordered pairs per difference), or
//   * the partial coset sums on a quotient cannot be completed to any
//     admissible intersection-number multiset.
// Survivors are verified with the exact group-ring equation and deduplicated
// by canonical key.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "sds/arith.hpp"
#include "sds/finite_field.hpp"
#include "sds/group.hpp"
#include "sds/group_ring.hpp"
#include "sds/signed_set.hpp"

namespace sds {

// ---------------------------------------------------------------------------
// Numerical multipliers

struct MultiplierResult {
    bool applicable = false;       // false when gcd(v, n) != 1 or n < 1
    std::string reason;
    i64 modulus_e = 0;
    std::vector<i64> multipliers;  // sorted, always contains 1 when applicable
    i64 group_order = 0;
};

/// Units t mod e with t = p^f (mod e) for every prime p | n, i.e. the
/// intersection of the cyclic subgroups <p mod e>.
inline MultiplierResult numerical_multipliers(const AbelianGroup& group, i64 n)
{
    MultiplierResult out;
    out.modulus_e = group.exponent();
    const i64 e = out.modulus_e;
    if (n < 1) {
        out.reason = "n = " + std::to_string(n) + " < 1";
        return out;
    }
    if (std::gcd(group.order(), n) != 1) {
        out.reason = "gcd(v, n) = " + std::to_string(std::gcd(group.order(), n)) + " != 1";
        return out;
    }
    out.applicable = true;
    std::vector<char> keep(static_cast<std::size_t>(e), 0);
    for (i64 t = 0; t < e; ++t) keep[static_cast<std::size_t>(t)] = std::gcd(t, e) == 1 || e == 1;
    for (const auto& [p, exp] : factorize(n)) {
        (void)exp;
        std::vector<char> in_cyclic(static_cast<std::size_t>(e), 0);
        i64 cur = mod(1, e);
        do {
            in_cyclic[static_cast<std::size_t>(cur)] = 1;
            cur = static_cast<i64>(static_cast<__int128>(cur) * mod(p, e) % e);
        } while (cur != mod(1, e));
        for (i64 t = 0; t < e; ++t) keep[static_cast<std::size_t>(t)] &= in_cyclic[static_cast<std::size_t>(t)];
    }
    for (i64 t = 0; t < e; ++t)
        if (keep[static_cast<std::size_t>(t)]) out.multipliers.push_back(e == 1 ? 1 : t);
    out.group_order = static_cast<i64>(out.multipliers.size());
    return out;
}

// ---------------------------------------------------------------------------
// Intersection numbers

struct IntersectionSolution {
    std::vector<i64> b;  // nonincreasing, size w
    i64 d = 0;
    i64 w = 0;
    bool operator==(const IntersectionSolution&) const = default;
};

namespace detail {

/// All nonincreasing b of length w with sum s, sum of squares k + lambda(d-1),
/// |b_h| <= min(d, k), and coset support sizes c_h (|b_h| <= c_h <= d,
/// c_h = b_h mod 2) summing to k. No restriction on d and w.
inline std::vector<IntersectionSolution> enumerate_intersection_multisets(const SdsParams& p, i64 d, i64 w)
{
    std::vector<IntersectionSolution> out;
    const i64 target_sum = p.s;
    const i64 target_sq = p.k + p.lambda * (d - 1);
    const i64 bound = std::min(d, p.k);
    if (target_sq < 0 || w < 1) return out;
    std::vector<i64> b;
    // Largest support size <= d with the parity of x.
    auto max_support = [&](i64 x) { return (d - std::llabs(x)) % 2 == 0 ? d : d - 1; };
    std::function<void(i64, i64, i64, i64, i64, i64)> rec = [&](i64 left, i64 sum, i64 sq, i64 cap, i64 min_c, i64 max_c) {
        if (left == 0) {
            if (sum == target_sum && sq == target_sq && min_c <= p.k && p.k <= max_c)
                out.push_back({b, d, w});
            return;
        }
        for (i64 x = cap; x >= -bound; --x) {
            const i64 nsq = sq + x * x;
            if (nsq > target_sq) continue;
            // Remaining entries are <= x: their sum lies in [-bound*(left-1), x*(left-1)].
            const i64 rest = left - 1;
            const i64 need = target_sum - sum - x;
            if (need > x * rest) break;
            if (need < -bound * rest) continue;
            if (max_support(x) < std::llabs(x)) continue;
            b.push_back(x);
            rec(rest, sum + x, nsq, x, min_c + std::llabs(x), max_c + max_support(x));
            b.pop_back();
        }
    };
    rec(w, 0, 0, bound, 0, 0);
    return out;
}

} // namespace detail

/// Intersection-number multisets for the projection onto a quotient of
/// order w with kernel order d; requires d * w = v and d, w > 1.
inline std::vector<IntersectionSolution> intersection_solutions(const SdsParams& params, i64 d, i64 w)
{
    if (d <= 1 || w <= 1 || d * w != params.v)
        throw Error(Errc::precondition, "need v = d*w with d, w > 1 (v=" + std::to_string(params.v) +
                                            ", d=" + std::to_string(d) + ", w=" + std::to_string(w) + ")");
    return detail::enumerate_intersection_multisets(params, d, w);
}

// ---------------------------------------------------------------------------
// Search

enum class SearchStatus { exhaustive, partial, infeasible };

inline const char* status_name(SearchStatus s)
{
    switch (s) {
    case SearchStatus::exhaustive: return "exhaustive";
    case SearchStatus::partial: return "partial";
    case SearchStatus::infeasible: return "infeasible";
    }
    return "?";
}

using SignPrefix = std::vector<std::int8_t>;

struct SearchOptions {
    std::optional<i64> multiplier;                            // force t instead of choosing
    std::optional<std::vector<std::vector<GroupElement>>> quotient_kernels;  // generator lists; default: maximal cyclic
    bool prune_quotient = true;
    bool prune_diff = true;
    std::uint64_t max_nodes = 0;  // 0 = unlimited
    double time_limit_s = 0;      // 0 = unlimited
    unsigned threads = 1;
    std::vector<SignPrefix> frontier;  // resume from these prefixes instead of the root
    i64 element_ceiling = 25;
};

struct SearchReport {
    SdsParams params;
    AbelianGroup group;
    std::vector<SignedDiffSet> sets_found;  // sorted by canonical key
    std::vector<std::string> keys;          // canonical keys, parallel to sets_found
    std::uint64_t nodes_explored = 0;
    SearchStatus status = SearchStatus::infeasible;
    i64 multiplier = 1;
    std::size_t cell_count = 0;
    std::string scope;
    std::string message;
    std::vector<SignPrefix> frontier;  // unexplored prefixes when partial
};

namespace detail {

/// Cyclic subgroups K with 1 < |K| < v not properly contained in another such subgroup.
inline std::vector<std::vector<i64>> maximal_cyclic_subgroups(const AbelianGroup& G)
{
    std::set<std::vector<i64>> all;
    for (i64 g = 1; g < G.order(); ++g) {
        const i64 ord = G.element_order(g);
        if (ord == G.order()) continue;
        std::vector<i64> members;
        i64 cur = 0;
        for (i64 i = 0; i < ord; ++i) {
            members.push_back(cur);
            cur = G.add_ranks(cur, g);
        }
        std::sort(members.begin(), members.end());
        all.insert(std::move(members));
    }
    std::vector<std::vector<i64>> out;
    for (const auto& K : all) {
        bool maximal = true;
        for (const auto& L : all)
            if (L.size() > K.size() && std::includes(L.begin(), L.end(), K.begin(), K.end())) {
                maximal = false;
                break;
            }
        if (maximal) out.push_back(K);
    }
    return out;
}

struct QuotientPruner {
    QuotientData q;
    i64 d = 0;
    std::vector<std::vector<i64>> ascending;  // admissible multisets, ascending
};

struct SearchContext {
    AbelianGroup group;
    SdsParams params;
    std::vector<std::vector<i64>> cells;     // in assignment order
    std::vector<std::vector<char>> reach;    // reach[i][x]: cells i.. have a subset of total size x
    std::vector<QuotientPruner> quotients;
    std::optional<std::pair<std::size_t, std::int8_t>> forced;  // (cell, sign) fixed for symmetry breaking
    SearchOptions options;
};

class ResultCollector {
public:
    void add(std::string key, SignedDiffSet set)
    {
        std::lock_guard lock(mu_);
        found_.emplace(std::move(key), std::move(set));
    }
    std::map<std::string, SignedDiffSet> take()
    {
        std::lock_guard lock(mu_);
        return std::move(found_);
    }

private:
    std::mutex mu_;
    std::map<std::string, SignedDiffSet> found_;
};

struct SharedControl {
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> stop{false};
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    std::mutex frontier_mu;
    std::vector<SignPrefix> frontier;
};

class Engine {
public:
    Engine(const SearchContext& ctx, ResultCollector& out, SharedControl& ctl)
        : ctx_(ctx), out_(out), ctl_(ctl), v_(ctx.group.order())
    {
        coef_.assign(static_cast<std::size_t>(v_), 0);
        diff_.assign(static_cast<std::size_t>(v_), 0);
        for (const auto& qp : ctx_.quotients) {
            cur_.emplace_back(static_cast<std::size_t>(qp.q.w()), 0);
            undecided_.emplace_back(static_cast<std::size_t>(qp.q.w()), qp.d);
        }
    }

    enum class Outcome { done, aborted };

    /// Replays a prefix from the root; returns false if it is pruned on the way.
    bool replay(const SignPrefix& prefix)
    {
        path_.clear();
        for (std::size_t i = 0; i < prefix.size(); ++i) {
            if (!allowed(i, prefix[i])) return false;
            apply(i, prefix[i]);
            path_.push_back(prefix[i]);
            if (!viable(i + 1)) return false;
        }
        return true;
    }

    void unwind()
    {
        while (!path_.empty()) {
            std::size_t i = path_.size() - 1;
            undo(i, path_.back());
            path_.pop_back();
        }
    }

    /// Explores the subtree below the current path; `stop_depth` limits depth
    /// (children at that depth are reported through `at_stop`).
    Outcome dfs(std::size_t depth, std::size_t stop_depth = SIZE_MAX,
                const std::function<void(const SignPrefix&)>& at_stop = {})
    {
        if (depth == ctx_.cells.size()) {
            leaf();
            return Outcome::done;
        }
        if (depth == stop_depth) {
            at_stop(path_);
            return Outcome::done;
        }
        static constexpr std::int8_t order[3] = {1, -1, 0};
        for (int oi = 0; oi < 3; ++oi) {
            const std::int8_t sigma = order[oi];
            if (!allowed(depth, sigma)) continue;
            if (over_budget()) {
                // This child and all later siblings stay unexplored.
                record_siblings(depth, oi);
                return Outcome::aborted;
            }
            apply(depth, sigma);
            path_.push_back(sigma);
            Outcome res = Outcome::done;
            ++local_nodes_;
            ctl_.nodes.fetch_add(1, std::memory_order_relaxed);
            if (viable(depth + 1)) res = dfs(depth + 1, stop_depth, at_stop);
            path_.pop_back();
            undo(depth, sigma);
            if (res == Outcome::aborted) {
                record_siblings(depth, oi + 1);
                return Outcome::aborted;
            }
        }
        return Outcome::done;
    }

    std::uint64_t local_nodes() const { return local_nodes_; }

private:
    bool allowed(std::size_t cell, std::int8_t sigma) const
    {
        if (ctx_.forced && ctx_.forced->first == cell && ctx_.forced->second != sigma) return false;
        const i64 size = static_cast<i64>(ctx_.cells[cell].size());
        if (sigma == 1) return p_used_ + size <= ctx_.params.p_size;
        if (sigma == -1) return n_used_ + size <= ctx_.params.n_size;
        return true;
    }

    bool over_budget()
    {
        if (ctl_.stop.load(std::memory_order_relaxed)) return true;
        const auto& opt = ctx_.options;
        if (opt.max_nodes && ctl_.nodes.load(std::memory_order_relaxed) >= opt.max_nodes) {
            ctl_.stop = true;
            return true;
        }
        if (opt.time_limit_s > 0 && (++clock_tick_ & 1023) == 0) {
            const std::chrono::duration<double> el = std::chrono::steady_clock::now() - ctl_.start;
            if (el.count() > opt.time_limit_s) {
                ctl_.stop = true;
                return true;
            }
        }
        return false;
    }

    void record_siblings(std::size_t depth, int from)
    {
        static constexpr std::int8_t order[3] = {1, -1, 0};
        std::lock_guard lock(ctl_.frontier_mu);
        for (int oi = from; oi < 3; ++oi) {
            if (!allowed(depth, order[oi])) continue;
            SignPrefix p = path_;
            p.push_back(order[oi]);
            ctl_.frontier.push_back(std::move(p));
        }
    }

    void apply(std::size_t cell, std::int8_t sigma)
    {
        const auto& members = ctx_.cells[cell];
        const bool track = ctx_.options.prune_diff;
        for (i64 x : members) {
            if (sigma != 0) {
                if (track) {
                    for (i64 y : support_) {
                        const i64 prod = sigma * coef_[static_cast<std::size_t>(y)];
                        diff_[static_cast<std::size_t>(ctx_.group.sub_ranks(x, y))] += prod;
                        diff_[static_cast<std::size_t>(ctx_.group.sub_ranks(y, x))] += prod;
                    }
                    diff_[0] += 1;
                }
                coef_[static_cast<std::size_t>(x)] = sigma;
                support_.push_back(x);
            }
            for (std::size_t qi = 0; qi < ctx_.quotients.size(); ++qi) {
                const auto h = static_cast<std::size_t>(ctx_.quotients[qi].q.projection[static_cast<std::size_t>(x)]);
                cur_[qi][h] += sigma;
                undecided_[qi][h] -= 1;
            }
        }
        if (sigma == 1) p_used_ += static_cast<i64>(members.size());
        if (sigma == -1) n_used_ += static_cast<i64>(members.size());
    }

    void undo(std::size_t cell, std::int8_t sigma)
    {
        const auto& members = ctx_.cells[cell];
        const bool track = ctx_.options.prune_diff;
        for (auto it = members.rbegin(); it != members.rend(); ++it) {
            const i64 x = *it;
            for (std::size_t qi = 0; qi < ctx_.quotients.size(); ++qi) {
                const auto h = static_cast<std::size_t>(ctx_.quotients[qi].q.projection[static_cast<std::size_t>(x)]);
                cur_[qi][h] -= sigma;
                undecided_[qi][h] += 1;
            }
            if (sigma != 0) {
                support_.pop_back();
                coef_[static_cast<std::size_t>(x)] = 0;
                if (track) {
                    diff_[0] -= 1;
                    for (i64 y : support_) {
                        const i64 prod = sigma * coef_[static_cast<std::size_t>(y)];
                        diff_[static_cast<std::size_t>(ctx_.group.sub_ranks(x, y))] -= prod;
                        diff_[static_cast<std::size_t>(ctx_.group.sub_ranks(y, x))] -= prod;
                    }
                }
            }
        }
        if (sigma == 1) p_used_ -= static_cast<i64>(members.size());
        if (sigma == -1) n_used_ -= static_cast<i64>(members.size());
    }

    /// Checks the state after cells [0, next) are assigned.
    bool viable(std::size_t next)
    {
        const auto& P = ctx_.params;
        const i64 p_need = P.p_size - p_used_;
        const i64 n_need = P.n_size - n_used_;
        const auto& r = ctx_.reach[next];
        if (!r[static_cast<std::size_t>(p_need)] || !r[static_cast<std::size_t>(n_need)] ||
            !r[static_cast<std::size_t>(p_need + n_need)])
            return false;
        if (ctx_.options.prune_diff) {
            const i64 slack = 2 * (p_need + n_need);
            for (i64 g = 1; g < v_; ++g)
                if (std::llabs(diff_[static_cast<std::size_t>(g)] - P.lambda) > slack) return false;
        }
        if (ctx_.options.prune_quotient) {
            for (std::size_t qi = 0; qi < ctx_.quotients.size(); ++qi)
                if (!quotient_extendable(qi)) return false;
        }
        return true;
    }

    bool quotient_extendable(std::size_t qi)
    {
        const auto& qp = ctx_.quotients[qi];
        const std::size_t w = cur_[qi].size();
        intervals_.resize(w);
        for (std::size_t h = 0; h < w; ++h)
            intervals_[h] = {cur_[qi][h] - undecided_[qi][h], cur_[qi][h] + undecided_[qi][h]};
        std::sort(intervals_.begin(), intervals_.end());
        for (const auto& sol : qp.ascending) {
            // Greedy matching of ascending values to intervals by earliest right end.
            std::priority_queue<i64, std::vector<i64>, std::greater<>> open;
            std::size_t next = 0;
            bool ok = true;
            for (i64 val : sol) {
                while (next < w && intervals_[next].first <= val) open.push(intervals_[next++].second);
                while (!open.empty() && open.top() < val) {
                    ok = false;
                    break;
                }
                if (!ok || open.empty()) {
                    ok = false;
                    break;
                }
                open.pop();
            }
            if (ok) return true;
        }
        return false;
    }

    void leaf()
    {
        if (p_used_ != ctx_.params.p_size || n_used_ != ctx_.params.n_size) return;
        GroupRingElement a(ctx_.group, coef_);
        if (!check_sds_equation(a, ctx_.params.lambda).holds) return;
        auto set = SignedDiffSet::from_ring(a, ctx_.params.lambda);
        auto key = canonical_form(set);
        out_.add(std::move(key), std::move(set));
    }

    const SearchContext& ctx_;
    ResultCollector& out_;
    SharedControl& ctl_;
    i64 v_;
    std::vector<i64> coef_;
    std::vector<i64> diff_;
    std::vector<i64> support_;
    std::vector<std::vector<i64>> cur_;
    std::vector<std::vector<i64>> undecided_;
    std::vector<std::pair<i64, i64>> intervals_;
    SignPrefix path_;
    i64 p_used_ = 0;
    i64 n_used_ = 0;
    std::uint64_t local_nodes_ = 0;
    std::uint64_t clock_tick_ = 0;
};

inline std::vector<std::vector<char>> suffix_reach(const std::vector<std::vector<i64>>& cells, i64 v)
{
    const std::size_t m = cells.size();
    std::vector<std::vector<char>> reach(m + 1, std::vector<char>(static_cast<std::size_t>(v) + 1, 0));
    reach[m][0] = 1;
    for (std::size_t i = m; i-- > 0;) {
        const auto sz = cells[i].size();
        reach[i] = reach[i + 1];
        for (std::size_t x = sz; x <= static_cast<std::size_t>(v); ++x)
            if (reach[i + 1][x - sz]) reach[i][x] = 1;
    }
    return reach;
}

inline std::vector<QuotientPruner> build_quotients(const AbelianGroup& G, const SdsParams& params,
                                                   const SearchOptions& opt)
{
    std::vector<QuotientPruner> out;
    if (!opt.prune_quotient) return out;
    std::vector<std::vector<GroupElement>> kernels;
    if (opt.quotient_kernels) {
        kernels = *opt.quotient_kernels;
    } else {
        for (const auto& K : maximal_cyclic_subgroups(G)) {
            // Any element of maximal order in K generates it.
            i64 gen = K[1];
            for (i64 x : K)
                if (G.element_order(x) == static_cast<i64>(K.size())) gen = x;
            kernels.push_back({G.unrank(gen)});
        }
    }
    for (const auto& gens : kernels) {
        QuotientPruner qp;
        qp.q = quotient_by_subgroup(G, gens);
        qp.d = qp.q.kernel_order;
        if (qp.d <= 1 || qp.q.w() <= 1) continue;
        for (auto& sol : intersection_solutions(params, qp.d, qp.q.w())) {
            std::reverse(sol.b.begin(), sol.b.end());
            qp.ascending.push_back(std::move(sol.b));
        }
        out.push_back(std::move(qp));
    }
    return out;
}

inline SearchReport run_search(SearchContext ctx, SearchReport report)
{
    ResultCollector collector;
    SharedControl ctl;
    const auto& opt = ctx.options;

    std::vector<SignPrefix> tasks = opt.frontier;
    bool from_frontier = !tasks.empty();
    const unsigned threads = std::max(1u, opt.threads);
    if (!from_frontier) {
        if (threads == 1) {
            tasks.push_back({});
        } else {
            // Split the tree at a depth giving enough independent subtrees.
            std::size_t depth = 0;
            for (std::uint64_t width = 1; width < 8ull * threads && depth < ctx.cells.size(); width *= 3) ++depth;
            Engine splitter(ctx, collector, ctl);
            splitter.dfs(0, depth, [&](const SignPrefix& p) { tasks.push_back(p); });
        }
    }

    std::atomic<std::size_t> next{0};
    std::vector<SignPrefix> unstarted;
    std::mutex unstarted_mu;
    auto worker = [&]() {
        Engine eng(ctx, collector, ctl);
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            if (ctl.stop.load()) {
                std::lock_guard lock(unstarted_mu);
                unstarted.push_back(tasks[i]);
                continue;
            }
            if (eng.replay(tasks[i])) eng.dfs(tasks[i].size());
            eng.unwind();
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    auto found = collector.take();
    for (auto& [key, set] : found) {
        set.provenance.family = "search";
        report.keys.push_back(key);
        report.sets_found.push_back(std::move(set));
    }
    report.nodes_explored = ctl.nodes.load();
    report.frontier = std::move(ctl.frontier);
    report.frontier.insert(report.frontier.end(), unstarted.begin(), unstarted.end());
    std::sort(report.frontier.begin(), report.frontier.end());
    report.status = ctl.stop.load() && !report.frontier.empty() ? SearchStatus::partial : SearchStatus::exhaustive;
    if (from_frontier && report.status == SearchStatus::exhaustive)
        report.message = "resumed from " + std::to_string(opt.frontier.size()) + " frontier prefixes";
    return report;
}

/// Shared parameter checks; returns a finished report when the search must not run.
inline std::optional<SearchReport> precheck(const AbelianGroup& group, i64 k, i64 lambda, SearchReport& report)
{
    const i64 v = group.order();
    report.group = group;
    report.params = SdsParams{v, k, lambda, k - lambda, 0, 0, 0};
    if (is_excluded_trivial(v, k, lambda)) {
        report.status = SearchStatus::infeasible;
        report.message = "excluded trivial shape (v,v,v) or (v,v,v-4)";
        return report;
    }
    auto verdict = derive_params(v, k, lambda);
    if (!verdict.feasible()) {
        report.status = SearchStatus::infeasible;
        report.message = std::string(infeasibility_name(verdict.reason)) + ": " + verdict.detail;
        return report;
    }
    report.params = *verdict.params;
    return std::nullopt;
}

} // namespace detail

/// Searches unions of orbits of a multiplier t. When t is a numerical
/// multiplier every SDS with these parameters has a translate fixed by t,
/// so an exhaustive run finds every equivalence class.
inline SearchReport orbit_search(const AbelianGroup& group, i64 k, i64 lambda, SearchOptions options = {})
{
    SearchReport report;
    if (auto early = detail::precheck(group, k, lambda, report)) return *early;
    const auto& params = report.params;

    const auto mult = numerical_multipliers(group, params.n);
    i64 t = 1;
    bool certified = mult.applicable;
    if (options.multiplier) {
        t = *options.multiplier;
        certified = mult.applicable && std::binary_search(mult.multipliers.begin(), mult.multipliers.end(), mod(t, group.exponent()));
    } else if (mult.applicable) {
        std::size_t best = SIZE_MAX;
        for (i64 cand : mult.multipliers) {
            const auto count = multiplier_orbits(group, cand).size();
            if (count < best) {
                best = count;
                t = cand;
            }
        }
    }
    auto cells = multiplier_orbits(group, t);
    std::stable_sort(cells.begin(), cells.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });

    detail::SearchContext ctx;
    ctx.group = group;
    ctx.params = params;
    ctx.reach = detail::suffix_reach(cells, group.order());
    ctx.cells = std::move(cells);
    ctx.options = options;
    ctx.quotients = detail::build_quotients(group, params, options);

    report.multiplier = t;
    report.cell_count = ctx.cells.size();
    if (certified) {
        report.scope = "unions of orbits of t=" + std::to_string(t) + " (" + std::to_string(report.cell_count) +
                       " orbits); t is a numerical multiplier, so some translate of every such set is fixed by t "
                       "and all equivalence classes are covered";
    } else if (t == 1) {
        report.scope = "no numerical multiplier (" + mult.reason + "); all sign vectors searched";
    } else {
        report.scope = "unions of orbits of t=" + std::to_string(t) +
                       "; t is not a certified multiplier, so only t-invariant sets are covered";
    }
    return detail::run_search(std::move(ctx), std::move(report));
}

/// Element-by-element search; exhaustive up to equivalence within the ceiling.
/// Translation symmetry is broken by fixing the identity in P.
inline SearchReport exhaustive_element_search(const AbelianGroup& group, i64 k, i64 lambda, SearchOptions options = {})
{
    if (group.order() > options.element_ceiling)
        throw Error(Errc::precondition, "v = " + std::to_string(group.order()) + " exceeds the element-search ceiling " +
                                            std::to_string(options.element_ceiling) + "; use orbit_search");
    SearchReport report;
    if (auto early = detail::precheck(group, k, lambda, report)) return *early;
    const auto& params = report.params;

    std::vector<std::vector<i64>> cells;
    for (i64 x = 0; x < group.order(); ++x) cells.push_back({x});

    detail::SearchContext ctx;
    ctx.group = group;
    ctx.params = params;
    ctx.reach = detail::suffix_reach(cells, group.order());
    ctx.cells = std::move(cells);
    ctx.options = options;
    ctx.quotients = detail::build_quotients(group, params, options);
    if (params.p_size >= 1) ctx.forced = std::make_pair(std::size_t{0}, std::int8_t{1});

    report.multiplier = 1;
    report.cell_count = ctx.cells.size();
    report.scope = "all sign vectors with the identity in P (every set has such a translate)";
    return detail::run_search(std::move(ctx), std::move(report));
}

// ---------------------------------------------------------------------------
// Power-residue scan

struct ResidueHit {
    i64 v;
    SdsParams params;
    bool operator==(const ResidueHit&) const = default;
};

/// Primes v <= max_v with e | v-1 for which P = H_e, N = {0} is a signed
/// difference set. Counting rejects most v; survivors are verified exactly.
inline std::vector<ResidueHit> residue_scan(i64 e, i64 max_v)
{
    if (e < 2) throw Error(Errc::precondition, "residue power e must be >= 2");
    std::vector<ResidueHit> hits;
    for (i64 v = 3; v <= max_v; ++v) {
        if ((v - 1) % e != 0 || !is_prime(v)) continue;
        const i64 m = (v - 1) / e;
        const i64 k = m + 1;
        const i64 s = m - 1;
        const i64 num = s * s - k;
        if (num % (v - 1) != 0) continue;
        const i64 lambda = num / (v - 1);
        if (lambda < -1) continue;
        auto verdict = derive_params(v, k, lambda);
        if (!verdict.feasible()) continue;
        const AbelianGroup G({v});
        std::vector<GroupElement> P;
        for (i64 r : power_residues(v, e)) P.push_back(GroupElement{{r}});
        SignedDiffSet d(G, std::move(P), {G.identity()}, lambda);
        if (verify(d).passed) hits.push_back({v, *verdict.params});
    }
    return hits;
}

} // namespace sds
