#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "seedset/graph.hpp"
#include "seedset/thresholds.hpp"

namespace seedset {

/// How a solver chooses among equally good candidates.
///
/// Candidates are ordered by a rank: the node id itself for `min_id`, or a
/// seeded random permutation for `random`. The lowest rank wins.
struct TieBreak {
    enum class Kind { min_id, random };
    Kind kind = Kind::min_id;
    std::uint64_t seed = 0;

    static TieBreak min_id() { return {}; }
    static TieBreak random(std::uint64_t seed) { return {Kind::random, seed}; }

    std::vector<std::uint32_t> ranks(std::size_t n) const;
};

/// Which branch of the deprecation loop selected a node.
enum class SelectionCase : std::uint8_t {
    activated = 1,   // residual threshold reached 0
    forced = 2,      // too few usable in-neighbors left: seed it
    deprecated = 3,  // max k/(delta(delta+1)): limbo (MTS) or removal (TSS)
};

/// State at the start of one iteration, plus the node it selected.
struct IterationRecord {
    std::size_t iteration = 0;
    NodeId node = 0;
    SelectionCase selection = SelectionCase::activated;
    std::size_t remaining = 0;  // |U|
    std::size_t limbo = 0;      // |L ∩ U|
    std::size_t seeds = 0;      // |S|
};

struct SolverOptions {
    TieBreak tie;
    /// Stop MTS once U - L is empty. The remaining iterations are all
    /// zero-threshold removals, so the seed set is unchanged.
    bool early_exit = false;
    /// Check the iteration bound, the target-set property and (for MTS on
    /// bidirected or acyclic graphs) the size bound after every run; throws
    /// InvariantViolation on a breach.
    bool check_invariants = true;
    /// Recompute usable in-degrees after every MTS/TSS iteration and record
    /// the potential  sum_{U-L} min(1, k/(delta+1)).  O(|V||E|); tests only.
    bool diagnostics = false;
    bool record_trace = false;
};

struct TargetSetResult {
    std::vector<NodeId> seeds;  // ascending
    std::size_t iterations = 0;
    /// Selections per case, indexed by SelectionCase value - 1.
    std::array<std::size_t, 3> case_counts{};
    std::chrono::nanoseconds wall_time{0};
    std::vector<IterationRecord> trace;
    /// Potential after each iteration (diagnostics mode, MTS/TSS only); front() is the initial value.
    std::vector<double> potential;

    std::size_t size() const noexcept { return seeds.size(); }
    std::size_t count(SelectionCase c) const noexcept { return case_counts[static_cast<int>(c) - 1]; }
};

/// Deprecation heuristic with a limbo set: nodes deprecated by case 3 stay
/// in the graph and still pass on their influence once they activate.
/// Runs in O(|E| log |V|).
TargetSetResult mts(const Digraph& g, const ThresholdAssignment& t, const SolverOptions& options = {});

/// The limbo-free predecessor of `mts`: case-3 nodes are removed at once.
/// Requires a bidirected graph.
TargetSetResult tss(const Digraph& g, const ThresholdAssignment& t, const SolverOptions& options = {});

/// Additive baseline: eliminate zero-threshold nodes (propagating their
/// influence); otherwise seed the surviving node with the most surviving
/// out-neighbors. Ties follow `options.tie`.
TargetSetResult greedy(const Digraph& g, const ThresholdAssignment& t, const SolverOptions& options = {});

/// Subtractive baseline: while some surviving node has residual degree at
/// least its threshold, remove the one minimizing degree - threshold (lowest
/// id on ties). The surviving core is the seed set. Requires a bidirected graph.
TargetSetResult tip_decomp(const Digraph& g, const ThresholdAssignment& t, const SolverOptions& options = {});

/// CSV rows "iteration,node,case,U,L,S" with original node labels.
void write_trace_csv(const Digraph& g, const TargetSetResult& result, std::ostream& out);

}  // namespace seedset
