// MTS and TSS share one engine: three-case node selection over the residual
// graph U, with residual thresholds k and usable in-degrees delta. MTS keeps
// case-3 nodes in a limbo set L; TSS removes them.

#include <algorithm>
#include <numeric>
#include <optional>
#include <queue>
#include <random>
#include <stdexcept>
#include <string>

#include "seedset/activation.hpp"
#include "seedset/analysis.hpp"
#include "seedset/error.hpp"
#include "seedset/solvers.hpp"
#include "solver_common.hpp"

namespace seedset {

std::vector<std::uint32_t> TieBreak::ranks(std::size_t n) const {
    std::vector<std::uint32_t> rank(n);
    if (kind == Kind::min_id) {
        std::iota(rank.begin(), rank.end(), 0u);
        return rank;
    }
    std::vector<NodeId> order(n);
    std::iota(order.begin(), order.end(), NodeId{0});
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
    for (std::uint32_t r = 0; r < n; ++r) rank[order[r]] = r;
    return rank;
}

namespace {

struct Ranked {
    std::uint32_t rank;
    NodeId node;
    // std::priority_queue is a max-heap; invert so the lowest rank is on top.
    bool operator<(const Ranked& o) const noexcept { return rank > o.rank; }
};

// Snapshot of (k, delta) when pushed; stale once either value moves.
struct Candidate {
    Threshold k;
    std::uint32_t delta;
    std::uint32_t rank;
    NodeId node;

    // Larger k / (delta (delta + 1)) first, then lower rank. Compared by
    // cross-multiplication; delta >= 1 for every entry that can win.
    bool operator<(const Candidate& o) const noexcept {
        using wide = unsigned __int128;
        const wide lhs = wide(k) * (wide(o.delta) * (o.delta + 1));
        const wide rhs = wide(o.k) * (wide(delta) * (delta + 1));
        if (lhs != rhs) return lhs < rhs;
        return rank > o.rank;
    }
};

class DeprecationEngine {
public:
    DeprecationEngine(const Digraph& g, const ThresholdAssignment& t, const SolverOptions& opt, bool use_limbo)
        : g_(g), opt_(opt), use_limbo_(use_limbo), n_(g.num_nodes()), rank_(opt.tie.ranks(n_)),
          k_(t.values().begin(), t.values().end()), delta_(n_), in_u_(n_, 1), in_l_(n_, 0) {
        if (t.size() != n_) throw std::invalid_argument("threshold count does not match node count");
        for (NodeId v = 0; v < n_; ++v) {
            delta_[v] = static_cast<std::uint32_t>(g.in_degree(v));
            touch(v);
        }
        remaining_ = n_;
    }

    TargetSetResult run() {
        TargetSetResult result;
        if (opt_.diagnostics) result.potential.push_back(potential());
        while (remaining_ > 0) {
            if (opt_.early_exit && remaining_ == limbo_) break;
            const std::size_t active_before = remaining_ - limbo_;

            NodeId v{};
            SelectionCase which{};
            if (auto z = pop_zero()) {
                v = *z;
                which = SelectionCase::activated;
            } else if (auto f = pop_forced()) {
                v = *f;
                which = SelectionCase::forced;
            } else {
                v = pop_pick();
                which = SelectionCase::deprecated;
            }

            if (opt_.record_trace)
                result.trace.push_back({result.iterations + 1, v, which, remaining_, limbo_, seeds_.size()});
            const bool was_in_limbo = in_l_[v] != 0;
            apply(v, which);
            ++result.iterations;
            ++result.case_counts[static_cast<int>(which) - 1];

            if (opt_.diagnostics) {
                check_usable_degrees();
                const std::size_t active_after = remaining_ - limbo_;
                const std::size_t expected = (use_limbo_ && was_in_limbo) ? active_before : active_before - 1;
                if (active_after != expected)
                    throw InvariantViolation("U - L did not shrink by the expected amount at iteration " +
                                             std::to_string(result.iterations));
                result.potential.push_back(potential());
            }
        }
        std::sort(seeds_.begin(), seeds_.end());
        result.seeds = std::move(seeds_);
        return result;
    }

private:
    bool usable(NodeId v) const noexcept { return in_u_[v] && !in_l_[v]; }

    // Re-file v after k(v) or delta(v) changed.
    void touch(NodeId v) {
        if (k_[v] == 0) {
            zero_.push({rank_[v], v});
        } else if (!in_l_[v]) {
            if (delta_[v] < k_[v])
                forced_.push({rank_[v], v});
            else
                pick_.push({k_[v], delta_[v], rank_[v], v});
        }
    }

    std::optional<NodeId> pop_zero() {
        while (!zero_.empty()) {
            NodeId v = zero_.top().node;
            if (in_u_[v]) return v;
            zero_.pop();
        }
        return std::nullopt;
    }

    std::optional<NodeId> pop_forced() {
        while (!forced_.empty()) {
            NodeId v = forced_.top().node;
            if (usable(v) && delta_[v] < k_[v]) return v;
            forced_.pop();
        }
        return std::nullopt;
    }

    NodeId pop_pick() {
        while (!pick_.empty()) {
            const Candidate c = pick_.top();
            pick_.pop();
            if (usable(c.node) && c.k == k_[c.node] && c.delta == delta_[c.node]) {
                if (c.k < 1 || c.k > c.delta)
                    throw InvariantViolation("deprecation candidate outside 1 <= k <= delta");
                return c.node;
            }
        }
        throw InvariantViolation("no node selectable although U is not empty");
    }

    void apply(NodeId v, SelectionCase which) {
        const bool in_limbo = in_l_[v] != 0;
        switch (which) {
            case SelectionCase::activated:
                for (NodeId u : g_.out(v)) {
                    if (!in_u_[u]) continue;
                    if (k_[u] > 0) --k_[u];
                    if (!in_limbo) --delta_[u];
                    touch(u);
                }
                remove(v);
                break;
            case SelectionCase::forced:
                seeds_.push_back(v);
                for (NodeId u : g_.out(v)) {
                    if (!in_u_[u]) continue;
                    --k_[u];
                    --delta_[u];
                    touch(u);
                }
                remove(v);
                break;
            case SelectionCase::deprecated:
                for (NodeId u : g_.out(v)) {
                    if (!in_u_[u]) continue;
                    --delta_[u];
                    touch(u);
                }
                if (use_limbo_) {
                    in_l_[v] = 1;
                    ++limbo_;
                } else {
                    remove(v);
                }
                break;
        }
    }

    void remove(NodeId v) {
        in_u_[v] = 0;
        --remaining_;
        if (in_l_[v]) {
            in_l_[v] = 0;
            --limbo_;
        }
    }

    // delta(u) must equal |in(u) ∩ (U - L)| for every u in U.
    void check_usable_degrees() const {
        for (NodeId u = 0; u < n_; ++u) {
            if (!in_u_[u]) continue;
            std::uint32_t usable_in = 0;
            for (NodeId w : g_.in(u))
                if (usable(w)) ++usable_in;
            if (usable_in != delta_[u])
                throw InvariantViolation("usable in-degree out of sync for node " + std::to_string(u));
        }
    }

    double potential() const {
        double w = 0;
        for (NodeId u = 0; u < n_; ++u)
            if (usable(u)) w += std::min(1.0, static_cast<double>(k_[u]) / (delta_[u] + 1.0));
        return w;
    }

    const Digraph& g_;
    const SolverOptions& opt_;
    const bool use_limbo_;
    const std::size_t n_;
    std::vector<std::uint32_t> rank_;
    std::vector<Threshold> k_;
    std::vector<std::uint32_t> delta_;
    std::vector<char> in_u_, in_l_;
    std::size_t remaining_ = 0, limbo_ = 0;
    std::vector<NodeId> seeds_;

    std::priority_queue<Ranked> zero_, forced_;
    std::priority_queue<Candidate> pick_;
};

}  // namespace

TargetSetResult mts(const Digraph& g, const ThresholdAssignment& t, const SolverOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    TargetSetResult result = DeprecationEngine(g, t, options, /*use_limbo=*/true).run();
    result.wall_time = std::chrono::steady_clock::now() - start;
    if (options.check_invariants) {
        detail::check_iteration_bound(g, result, "mts");
        detail::check_target_set(g, t, result, "mts");
        // The degree bound is a theorem for undirected graphs and holds trivially
        // on DAGs; general digraphs have small counterexamples, so it is not asserted there.
        if ((g.bidirected() || is_dag(g)) && !upper_bound(g, t).admits(result.size()))
            throw InvariantViolation("mts: seed set of size " + std::to_string(result.size()) +
                                     " exceeds the degree upper bound");
    }
    return result;
}

TargetSetResult tss(const Digraph& g, const ThresholdAssignment& t, const SolverOptions& options) {
    if (!g.bidirected()) throw std::invalid_argument("tss requires an undirected (bidirected) graph");
    const auto start = std::chrono::steady_clock::now();
    TargetSetResult result = DeprecationEngine(g, t, options, /*use_limbo=*/false).run();
    result.wall_time = std::chrono::steady_clock::now() - start;
    if (options.check_invariants) {
        detail::check_iteration_bound(g, result, "tss");
        detail::check_target_set(g, t, result, "tss");
    }
    return result;
}

}  // namespace seedset
