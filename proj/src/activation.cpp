#include "seedset/activation.hpp"

#include <algorithm>
#include <stdexcept>

namespace seedset {

std::vector<NodeId> ActivationTrace::active_at(std::uint32_t r) const {
    std::vector<NodeId> nodes;
    for (NodeId v = 0; v < round_of_.size(); ++v)
        if (round_of_[v] <= r) nodes.push_back(v);
    return nodes;
}

ActivationTrace activate(const Digraph& g, const ThresholdAssignment& t, std::span<const NodeId> seeds) {
    const std::size_t n = g.num_nodes();
    if (t.size() != n) throw std::invalid_argument("threshold count does not match node count");

    ActivationTrace trace;
    trace.round_of_.assign(n, ActivationTrace::never);
    // Residual requirement: active in-neighbors still needed.
    std::vector<std::int64_t> need(n);
    for (NodeId v = 0; v < n; ++v) need[v] = t[v];

    std::vector<NodeId> frontier;
    for (NodeId s : seeds) {
        if (s >= n) throw std::out_of_range("seed out of range");
        if (trace.round_of_[s] == ActivationTrace::never) {
            trace.round_of_[s] = 0;
            frontier.push_back(s);
        }
    }
    std::sort(frontier.begin(), frontier.end());
    trace.added_.push_back(frontier);

    // Zero-threshold nodes have zero active in-neighbors at round 0 and
    // still qualify, so they join at round 1.
    std::vector<NodeId> next;
    for (NodeId v = 0; v < n; ++v)
        if (need[v] <= 0 && trace.round_of_[v] == ActivationTrace::never) {
            trace.round_of_[v] = 1;
            next.push_back(v);
        }

    std::uint32_t round = 1;
    for (;;) {
        // Everything in `frontier` became active at round-1; its influence
        // decides who joins at `round`.
        for (NodeId v : frontier)
            for (NodeId w : g.out(v))
                if (trace.round_of_[w] == ActivationTrace::never && --need[w] <= 0) {
                    trace.round_of_[w] = round;
                    next.push_back(w);
                }
        if (next.empty()) break;
        std::sort(next.begin(), next.end());
        trace.added_.push_back(next);
        frontier.swap(next);
        next.clear();
        ++round;
    }

    for (const auto& layer : trace.added_) trace.num_active_ += layer.size();
    return trace;
}

bool is_target_set(const Digraph& g, const ThresholdAssignment& t, std::span<const NodeId> seeds) {
    return activate(g, t, seeds).all_active();
}

}  // namespace seedset
