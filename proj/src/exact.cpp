#include "seedset/exact.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace seedset {

namespace {

using Mask = std::uint64_t;

// Fixpoint of the activation process on bitmasks; independent of the
// round-based implementation in activation.cpp.
class MaskClosure {
public:
    MaskClosure(const Digraph& g, const ThresholdAssignment& t) : n_(g.num_nodes()), in_(n_), t_(n_) {
        full_ = n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
        for (NodeId v = 0; v < n_; ++v) {
            for (NodeId u : g.in(v)) in_[v] |= Mask{1} << u;
            t_[v] = t[v];
        }
    }

    bool activates_all(Mask active) const {
        for (bool grew = true; grew && active != full_;) {
            grew = false;
            for (std::size_t v = 0; v < n_; ++v) {
                const Mask bit = Mask{1} << v;
                if (!(active & bit) && static_cast<std::size_t>(std::popcount(in_[v] & active)) >= t_[v]) {
                    active |= bit;
                    grew = true;
                }
            }
        }
        return active == full_;
    }

private:
    std::size_t n_;
    Mask full_;
    std::vector<Mask> in_;
    std::vector<std::size_t> t_;
};

// Advances `pick` (strictly increasing indices into a pool of size m) to the
// next k-combination in lexicographic order; false after the last one.
bool next_combination(std::vector<std::size_t>& pick, std::size_t m) {
    const std::size_t k = pick.size();
    for (std::size_t i = k; i-- > 0;) {
        if (pick[i] < m - k + i) {
            ++pick[i];
            for (std::size_t j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

ExactResult brute_force(const Digraph& g, const ThresholdAssignment& t, const BruteForceOptions& options) {
    const std::size_t n = g.num_nodes();
    if (t.size() != n) throw std::invalid_argument("threshold count does not match node count");
    if (n > options.node_limit || n > 64)
        throw std::invalid_argument("brute force refused: " + std::to_string(n) + " nodes exceed the limit of " +
                                    std::to_string(std::min<std::size_t>(options.node_limit, 64)));

    MaskClosure closure(g, t);
    Mask fixed = 0;
    std::vector<NodeId> pool;
    for (NodeId v = 0; v < n; ++v) {
        if (options.forced_seed_pruning && t[v] > g.in_degree(v))
            fixed |= Mask{1} << v;
        else
            pool.push_back(v);
    }

    ExactResult result;
    for (std::size_t k = 0; k <= pool.size(); ++k) {
        std::vector<std::size_t> pick(k);
        for (std::size_t i = 0; i < k; ++i) pick[i] = i;
        do {
            Mask s = fixed;
            for (std::size_t i : pick) s |= Mask{1} << pool[i];
            ++result.subsets_checked;
            if (closure.activates_all(s)) {
                for (NodeId v = 0; v < n; ++v)
                    if (s & (Mask{1} << v)) result.seeds.push_back(v);
                result.opt_size = result.seeds.size();
                return result;
            }
        } while (next_combination(pick, pool.size()));
    }
    // Unreachable: the full pool always activates everything.
    throw std::logic_error("brute force found no target set");
}

ExactResult dag_optimal(const Digraph& g, const ThresholdAssignment& t) {
    if (t.size() != g.num_nodes()) throw std::invalid_argument("threshold count does not match node count");
    if (!is_dag(g)) throw std::invalid_argument("dag_optimal requires an acyclic graph");
    ExactResult result;
    for (NodeId v = 0; v < g.num_nodes(); ++v)
        if (t[v] > g.in_degree(v)) result.seeds.push_back(v);
    result.opt_size = result.seeds.size();
    return result;
}

std::vector<PolytreeComponent> polytree_reduce(const Digraph& g, const ThresholdAssignment& t) {
    const std::size_t n = g.num_nodes();
    if (t.size() != n) throw std::invalid_argument("threshold count does not match node count");
    if (!is_underlying_tree(g)) throw std::invalid_argument("polytree_reduce requires a polytree");

    std::vector<Threshold> reduced(t.values().begin(), t.values().end());
    std::vector<Arc> two_way;
    for (const Arc& a : g.arcs()) {
        if (g.has_arc(a.to, a.from)) {
            if (a.from < a.to) two_way.push_back(a);
        } else if (reduced[a.to] > 0) {
            --reduced[a.to];  // the tail's side always activates a.from eventually
        }
    }

    const Digraph forest = Digraph::from_arcs(n, two_way, true);
    std::size_t count = 0;
    const auto comp = weak_components(forest, &count);
    std::vector<std::vector<NodeId>> members(count);
    for (NodeId v = 0; v < n; ++v) members[comp[v]].push_back(v);

    std::vector<PolytreeComponent> parts;
    parts.reserve(count);
    for (auto& nodes : members) {
        PolytreeComponent part;
        part.tree = g.induced(nodes);
        // induced() keeps one-way arcs between members; there are none inside a
        // component because its nodes are joined only by two-way arcs of a tree.
        std::vector<Threshold> local;
        local.reserve(nodes.size());
        for (NodeId v : nodes) local.push_back(reduced[v]);
        part.thresholds = ThresholdAssignment(std::move(local));
        part.original = std::move(nodes);
        parts.push_back(std::move(part));
    }
    return parts;
}

}  // namespace seedset
