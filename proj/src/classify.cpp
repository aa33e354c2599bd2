#include <algorithm>
#include <iterator>
#include <limits>

#include "seedset/graph.hpp"

namespace seedset {

namespace {

// Neighbors in the underlying simple undirected graph.
std::vector<std::vector<NodeId>> underlying(const Digraph& g) {
    std::vector<std::vector<NodeId>> adj(g.num_nodes());
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
        auto out = g.out(v);
        auto in = g.in(v);
        adj[v].reserve(out.size() + in.size());
        std::set_union(out.begin(), out.end(), in.begin(), in.end(), std::back_inserter(adj[v]));
    }
    return adj;
}

bool connected(const std::vector<std::vector<NodeId>>& adj) {
    if (adj.empty()) return true;
    std::vector<bool> seen(adj.size(), false);
    std::vector<NodeId> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        NodeId v = stack.back();
        stack.pop_back();
        for (NodeId w : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == adj.size();
}

std::size_t edge_count(const std::vector<std::vector<NodeId>>& adj) {
    std::size_t twice = 0;
    for (const auto& nbrs : adj) twice += nbrs.size();
    return twice / 2;
}

// Ore: every non-adjacent pair has degree sum >= n. For each u, the nodes v
// with d(u) + d(v) < n must all be neighbors of u; compare the global count
// of such v (via sorted degrees) with the count among u's neighbors.
bool ore_condition(const Digraph& g) {
    const std::size_t n = g.num_nodes();
    std::vector<std::size_t> sorted(n);
    for (NodeId v = 0; v < n; ++v) sorted[v] = g.out_degree(v);
    std::sort(sorted.begin(), sorted.end());
    for (NodeId u = 0; u < n; ++u) {
        const std::size_t du = g.out_degree(u);
        const std::size_t limit = n - du;  // v is "small" for u when d(v) < limit
        std::size_t small = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), limit) - sorted.begin());
        if (du < limit) --small;  // u itself
        std::size_t small_nbrs = 0;
        for (NodeId w : g.out(u))
            if (g.out_degree(w) < limit) ++small_nbrs;
        if (small > small_nbrs) return false;
    }
    return true;
}

}  // namespace

bool is_dag(const Digraph& g) {
    std::vector<std::size_t> indeg(g.num_nodes());
    std::vector<NodeId> ready;
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
        indeg[v] = g.in_degree(v);
        if (indeg[v] == 0) ready.push_back(v);
    }
    std::size_t done = 0;
    while (!ready.empty()) {
        NodeId v = ready.back();
        ready.pop_back();
        ++done;
        for (NodeId w : g.out(v))
            if (--indeg[w] == 0) ready.push_back(w);
    }
    return done == g.num_nodes();
}

bool is_underlying_tree(const Digraph& g) {
    auto adj = underlying(g);
    return edge_count(adj) + 1 == g.num_nodes() && connected(adj);
}

std::vector<std::uint32_t> weak_components(const Digraph& g, std::size_t* count) {
    constexpr std::uint32_t unset = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> comp(g.num_nodes(), unset);
    std::uint32_t next = 0;
    std::vector<NodeId> stack;
    for (NodeId s = 0; s < g.num_nodes(); ++s) {
        if (comp[s] != unset) continue;
        comp[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            NodeId v = stack.back();
            stack.pop_back();
            for (auto nbrs : {g.out(v), g.in(v)})
                for (NodeId w : nbrs)
                    if (comp[w] == unset) {
                        comp[w] = next;
                        stack.push_back(w);
                    }
        }
        ++next;
    }
    if (count) *count = next;
    return comp;
}

GraphClassReport classify(const Digraph& g) {
    const std::size_t n = g.num_nodes();
    GraphClassReport r;
    r.is_dag = is_dag(g);

    auto adj = underlying(g);
    const bool conn = connected(adj);
    r.is_tree_underlying = conn && edge_count(adj) + 1 == n;

    if (n >= 3 && conn) {
        bool all_two = std::all_of(adj.begin(), adj.end(), [](const auto& a) { return a.size() == 2; });
        bool directed_cycle = true;
        for (NodeId v = 0; v < n; ++v)
            if (g.in_degree(v) != 1 || g.out_degree(v) != 1) directed_cycle = false;
        r.is_cycle = all_two && (g.bidirected() || directed_cycle);
    }

    r.is_clique = g.num_arcs() == n * (n - 1);

    if (g.bidirected()) {
        std::size_t min_deg = n;
        for (NodeId v = 0; v < n; ++v) min_deg = std::min(min_deg, g.out_degree(v));
        r.is_dirac = n >= 1 && 2 * min_deg >= n;
        r.is_ore = r.is_dirac || ore_condition(g);
    }
    return r;
}

}  // namespace seedset
