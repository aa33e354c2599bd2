#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "seedset/graph.hpp"
#include "seedset/thresholds.hpp"

namespace seedset {

/// Synchronous Linear Threshold activation from a seed set.
///
/// Round 0 is the seed set; in round r every node whose number of incoming
/// neighbors active at round r-1 reaches its threshold joins. The chain stops
/// at the first round that adds nothing.
class ActivationTrace {
public:
    static constexpr std::uint32_t never = UINT32_MAX;

    /// Round at which `v` became active, or `never`.
    std::uint32_t activated_at(NodeId v) const noexcept { return round_of_[v]; }
    bool active(NodeId v) const noexcept { return round_of_[v] != never; }

    /// Index of the last round that added a node (0 when nothing beyond the seeds activates).
    std::uint32_t converged_at() const noexcept { return static_cast<std::uint32_t>(added_.size() - 1); }
    /// Nodes that joined exactly at round r (r = 0 gives the seeds), ascending.
    std::span<const NodeId> added_in(std::uint32_t r) const noexcept { return added_[r]; }
    /// Active[S, r]: every node active by round r, ascending. Rounds past the fixpoint return the final set.
    std::vector<NodeId> active_at(std::uint32_t r) const;
    /// Active[S, converged_at()].
    std::vector<NodeId> final_active() const { return active_at(converged_at()); }
    std::size_t num_active() const noexcept { return num_active_; }
    bool all_active() const noexcept { return num_active_ == round_of_.size(); }

private:
    friend ActivationTrace activate(const Digraph&, const ThresholdAssignment&, std::span<const NodeId>);

    std::vector<std::uint32_t> round_of_;
    std::vector<std::vector<NodeId>> added_;
    std::size_t num_active_ = 0;
};

/// Runs the activation process in O(|V| + |E|). Duplicate seeds are ignored.
ActivationTrace activate(const Digraph& g, const ThresholdAssignment& t, std::span<const NodeId> seeds);

/// True iff the process started at `seeds` eventually activates every node.
bool is_target_set(const Digraph& g, const ThresholdAssignment& t, std::span<const NodeId> seeds);

}  // namespace seedset
