#include <algorithm>
#include <ostream>
#include <queue>
#include <stdexcept>

#include "seedset/solvers.hpp"
#include "solver_common.hpp"

namespace seedset {

namespace {

struct Keyed {
    std::int64_t key;
    std::uint32_t rank;
    NodeId node;
    // Max-heap on key, then lowest rank.
    bool operator<(const Keyed& o) const noexcept { return key != o.key ? key < o.key : rank > o.rank; }
};

}  // namespace

TargetSetResult greedy(const Digraph& g, const ThresholdAssignment& t, const SolverOptions& options) {
    const std::size_t n = g.num_nodes();
    if (t.size() != n) throw std::invalid_argument("threshold count does not match node count");
    const auto start = std::chrono::steady_clock::now();
    const auto rank = options.tie.ranks(n);

    std::vector<Threshold> k(t.values().begin(), t.values().end());
    std::vector<std::int64_t> out_deg(n);
    std::vector<char> alive(n, 1);
    std::vector<NodeId> zero;
    std::priority_queue<Keyed> by_degree;
    for (NodeId v = 0; v < n; ++v) {
        out_deg[v] = static_cast<std::int64_t>(g.out_degree(v));
        if (k[v] == 0) zero.push_back(v);
        by_degree.push({out_deg[v], rank[v], v});
    }

    TargetSetResult result;
    std::size_t remaining = n;
    auto drop = [&](NodeId v, SelectionCase which) {
        if (options.record_trace)
            result.trace.push_back({result.iterations + 1, v, which, remaining, 0, result.seeds.size()});
        ++result.iterations;
        ++result.case_counts[static_cast<int>(which) - 1];
        alive[v] = 0;
        --remaining;
        for (NodeId u : g.out(v))
            if (alive[u] && k[u] > 0 && --k[u] == 0) zero.push_back(u);
        for (NodeId w : g.in(v))
            if (alive[w]) by_degree.push({--out_deg[w], rank[w], w});
    };

    while (remaining > 0) {
        if (!zero.empty()) {
            NodeId v = zero.back();
            zero.pop_back();
            if (alive[v]) drop(v, SelectionCase::activated);
            continue;
        }
        const Keyed top = by_degree.top();
        by_degree.pop();
        if (!alive[top.node] || top.key != out_deg[top.node]) continue;
        result.seeds.push_back(top.node);
        drop(top.node, SelectionCase::forced);
    }

    std::sort(result.seeds.begin(), result.seeds.end());
    result.wall_time = std::chrono::steady_clock::now() - start;
    if (options.check_invariants) {
        detail::check_iteration_bound(g, result, "greedy");
        detail::check_target_set(g, t, result, "greedy");
    }
    return result;
}

TargetSetResult tip_decomp(const Digraph& g, const ThresholdAssignment& t, const SolverOptions& options) {
    if (!g.bidirected()) throw std::invalid_argument("tip_decomp requires an undirected (bidirected) graph");
    const std::size_t n = g.num_nodes();
    if (t.size() != n) throw std::invalid_argument("threshold count does not match node count");
    const auto start = std::chrono::steady_clock::now();

    std::vector<std::int64_t> slack(n);  // residual degree - threshold
    std::vector<char> alive(n, 1);
    // Min-heap on slack via negated keys; ties by lowest id.
    std::priority_queue<Keyed> heap;
    for (NodeId v = 0; v < n; ++v) {
        slack[v] = static_cast<std::int64_t>(g.out_degree(v)) - static_cast<std::int64_t>(t[v]);
        if (slack[v] >= 0) heap.push({-slack[v], v, v});
    }

    TargetSetResult result;
    std::size_t remaining = n;
    while (!heap.empty()) {
        const Keyed top = heap.top();
        heap.pop();
        const NodeId v = top.node;
        if (!alive[v] || -top.key != slack[v]) continue;
        if (options.record_trace)
            result.trace.push_back({result.iterations + 1, v, SelectionCase::deprecated, remaining, 0, 0});
        ++result.iterations;
        ++result.case_counts[static_cast<int>(SelectionCase::deprecated) - 1];
        alive[v] = 0;
        --remaining;
        for (NodeId u : g.out(v))
            if (alive[u] && --slack[u] >= 0) heap.push({-slack[u], u, u});
    }

    for (NodeId v = 0; v < n; ++v)
        if (alive[v]) result.seeds.push_back(v);
    result.wall_time = std::chrono::steady_clock::now() - start;
    if (options.check_invariants) {
        detail::check_iteration_bound(g, result, "tip_decomp");
        detail::check_target_set(g, t, result, "tip_decomp");
    }
    return result;
}

void write_trace_csv(const Digraph& g, const TargetSetResult& result, std::ostream& out) {
    out << "iteration,node,case,U,L,S\n";
    for (const auto& r : result.trace)
        out << r.iteration << ',' << g.label(r.node) << ',' << static_cast<int>(r.selection) << ',' << r.remaining
            << ',' << r.limbo << ',' << r.seeds << '\n';
}

}  // namespace seedset
