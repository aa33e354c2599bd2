#include <random>
#include <stdexcept>
#include <string>

#include "seedset/graph.hpp"

namespace seedset {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

void require_prob(double p) {
    require(p >= 0.0 && p <= 1.0, "probability must lie in [0, 1]");
}

// Random recursive tree: node i attaches to a uniform earlier node.
std::vector<Arc> random_tree_edges(std::size_t n, std::mt19937_64& rng) {
    std::vector<Arc> edges;
    edges.reserve(n ? n - 1 : 0);
    for (NodeId i = 1; i < n; ++i) {
        std::uniform_int_distribution<NodeId> parent(0, i - 1);
        edges.push_back({parent(rng), i});
    }
    return edges;
}

}  // namespace

Digraph gen_tree(std::size_t n, std::uint64_t seed) {
    require(n >= 1, "tree needs n >= 1");
    std::mt19937_64 rng(seed);
    return Digraph::from_arcs(n, random_tree_edges(n, rng), true);
}

Digraph gen_cycle(std::size_t n, bool directed) {
    require(n >= 3, "cycle needs n >= 3");
    std::vector<Arc> arcs;
    for (NodeId i = 0; i < n; ++i) arcs.push_back({i, static_cast<NodeId>((i + 1) % n)});
    return Digraph::from_arcs(n, std::move(arcs), !directed);
}

Digraph gen_clique(std::size_t n) {
    require(n >= 1, "clique needs n >= 1");
    std::vector<Arc> arcs;
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = u + 1; v < n; ++v) arcs.push_back({u, v});
    return Digraph::from_arcs(n, std::move(arcs), true);
}

Digraph gen_dag(std::size_t n, double arc_prob, std::uint64_t seed) {
    require(n >= 1, "dag needs n >= 1");
    require_prob(arc_prob);
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(arc_prob);
    std::vector<Arc> arcs;
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = u + 1; v < n; ++v)
            if (coin(rng)) arcs.push_back({u, v});
    return Digraph::from_arcs(n, std::move(arcs), false);
}

Digraph gen_dirac(std::size_t n, std::uint64_t seed) {
    require(n >= 4 && n % 2 == 0, "dirac generator needs even n >= 4");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(0.25);
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    std::vector<std::size_t> deg(n, 0);
    auto add = [&](NodeId u, NodeId v) {
        adj[u][v] = adj[v][u] = true;
        ++deg[u];
        ++deg[v];
    };
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = u + 1; v < n; ++v)
            if (coin(rng)) add(u, v);

    // Raise the minimum degree to n/2 one random edge at a time.
    for (;;) {
        NodeId low = 0;
        for (NodeId v = 1; v < n; ++v)
            if (deg[v] < deg[low]) low = v;
        if (2 * deg[low] >= n) break;
        std::vector<NodeId> candidates;
        for (NodeId v = 0; v < n; ++v)
            if (v != low && !adj[low][v]) candidates.push_back(v);
        std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
        add(low, candidates[pick(rng)]);
    }

    std::vector<Arc> arcs;
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = u + 1; v < n; ++v)
            if (adj[u][v]) arcs.push_back({u, v});
    return Digraph::from_arcs(n, std::move(arcs), true);
}

Digraph gen_polytree(std::size_t n, std::uint64_t seed) {
    require(n >= 1, "polytree needs n >= 1");
    std::mt19937_64 rng(seed);
    auto edges = random_tree_edges(n, rng);
    std::bernoulli_distribution flip(0.5);
    for (Arc& e : edges)
        if (flip(rng)) std::swap(e.from, e.to);
    return Digraph::from_arcs(n, std::move(edges), false);
}

Digraph gen_gnp(std::size_t n, double p, bool directed, std::uint64_t seed) {
    require(n >= 1, "gnp needs n >= 1");
    require_prob(p);
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<Arc> arcs;
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = directed ? 0 : u + 1; v < n; ++v)
            if (u != v && coin(rng)) arcs.push_back({u, v});
    return Digraph::from_arcs(n, std::move(arcs), !directed);
}

Digraph gen_planted(std::size_t communities, std::size_t block_size, double avg_degree, double mixing,
                    std::uint64_t seed) {
    require(communities >= 1 && block_size >= 2, "planted partition needs >= 1 block of >= 2 nodes");
    require(mixing >= 0.0 && mixing <= 1.0, "mixing must lie in [0, 1]");
    const std::size_t n = communities * block_size;
    const double p_in = avg_degree * (1.0 - mixing) / static_cast<double>(block_size - 1);
    const double p_out = communities > 1 ? avg_degree * mixing / static_cast<double>(n - block_size) : 0.0;
    require(p_in <= 1.0 && p_out <= 1.0, "average degree too large for the block sizes");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Arc> arcs;
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = u + 1; v < n; ++v) {
            const double p = (u / block_size == v / block_size) ? p_in : p_out;
            if (unit(rng) < p) arcs.push_back({u, v});
        }
    return Digraph::from_arcs(n, std::move(arcs), true);
}

}  // namespace seedset
