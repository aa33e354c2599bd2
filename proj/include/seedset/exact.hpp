#pragma once

#include <cstdint>
#include <vector>

#include "seedset/graph.hpp"
#include "seedset/thresholds.hpp"

namespace seedset {

struct ExactResult {
    std::vector<NodeId> seeds;  // an optimum target set, ascending
    std::size_t opt_size = 0;
    std::uint64_t subsets_checked = 0;
};

struct BruteForceOptions {
    std::size_t node_limit = 16;
    /// Every node with t(v) > d_in(v) belongs to every target set; when set,
    /// such nodes are fixed and enumeration runs over the rest only.
    bool forced_seed_pruning = true;
};

/// Minimum target set by enumeration in order of cardinality, then
/// lexicographically; returns the first optimum found. Throws
/// std::invalid_argument when n exceeds the node limit (hard cap 64).
ExactResult brute_force(const Digraph& g, const ThresholdAssignment& t, const BruteForceOptions& options = {});

/// Optimum on a DAG: exactly the nodes with t(v) > d_in(v). Throws on cyclic input.
ExactResult dag_optimal(const Digraph& g, const ThresholdAssignment& t);

/// One bidirected tree produced by splitting a polytree at its one-way arcs.
struct PolytreeComponent {
    Digraph tree;                      // bidirected; node i is original node `original[i]`
    ThresholdAssignment thresholds;    // t minus one per one-way arc entering the node, floored at 0
    std::vector<NodeId> original;      // ascending
};

/// Splits a polytree (underlying graph is a tree) at every arc whose reverse
/// is absent. A set is a target set of the polytree iff its restriction to
/// each component is a target set of that component. Components are ordered
/// by smallest original node. Throws on non-polytree input.
std::vector<PolytreeComponent> polytree_reduce(const Digraph& g, const ThresholdAssignment& t);

}  // namespace seedset
