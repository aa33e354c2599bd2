#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "seedset/graph.hpp"
#include "seedset/thresholds.hpp"

namespace seedset {

/// Exact value of  sum_v min(1, t(v) / (d(v) + 1)),  with d(v) the in-degree
/// (the degree on bidirected graphs). Kept as an integer part plus one
/// numerator per distinct denominator, so comparisons are exact.
class UpperBound {
public:
    UpperBound() = default;

    /// Closest double to the exact sum.
    double value() const;
    /// Exact test of  size <= bound.
    bool admits(std::size_t size) const;
    /// Exact rational rendered as "p/q" in lowest terms.
    std::string exact() const;

    std::uint64_t whole() const noexcept { return whole_; }
    /// denominator -> summed numerators, each numerator < denominator after normalization.
    const std::map<std::uint64_t, std::uint64_t>& fractions() const noexcept { return fractions_; }

private:
    friend UpperBound upper_bound(const Digraph&, const ThresholdAssignment&);
    void add(std::uint64_t num, std::uint64_t den);

    std::uint64_t whole_ = 0;
    std::map<std::uint64_t, std::uint64_t> fractions_;
};

UpperBound upper_bound(const Digraph& g, const ThresholdAssignment& t);

// ---------------------------------------------------------------------------
// Community structure and statistics (bidirected graphs only).

/// Community id per node, ids dense in [0, num_communities).
struct Partition {
    std::vector<std::uint32_t> community;
    std::uint32_t num_communities = 0;

    /// Relabels arbitrary ids densely in order of first appearance.
    static Partition from_labels(std::span<const std::uint32_t> labels);
};

/// Newman modularity  Q = sum_c (e_c / m - (deg_c / 2m)^2).  Returns 0 for edgeless graphs.
double modularity(const Digraph& g, const Partition& p);

/// Asynchronous label propagation; deterministic for a given seed.
Partition detect_communities(const Digraph& g, std::uint64_t seed, std::size_t max_sweeps = 100);

/// Mean local clustering coefficient; nodes of degree < 2 contribute 0.
double clustering_coefficient(const Digraph& g);

/// Pearson product-moment correlation coefficient.
double pearson(std::span<const double> xs, std::span<const double> ys);

}  // namespace seedset
