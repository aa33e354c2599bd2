#pragma once

#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "seedset/graph.hpp"
#include "seedset/thresholds.hpp"

namespace seedset::testing {

inline Digraph parse(const std::string& text, EdgeMode mode = EdgeMode::undirected) {
    std::istringstream in(text);
    return load_edge_list(in, mode).graph;
}

inline Digraph directed(std::size_t n, std::initializer_list<std::pair<NodeId, NodeId>> arcs) {
    std::vector<Arc> a;
    for (auto [u, v] : arcs) a.push_back({u, v});
    return Digraph::from_arcs(n, std::move(a), false);
}

inline Digraph undirected(std::size_t n, std::initializer_list<std::pair<NodeId, NodeId>> edges) {
    std::vector<Arc> a;
    for (auto [u, v] : edges) a.push_back({u, v});
    return Digraph::from_arcs(n, std::move(a), true);
}

inline ThresholdAssignment thresholds(std::initializer_list<Threshold> values) {
    return ThresholdAssignment(std::vector<Threshold>(values));
}

inline ThresholdAssignment uniform(std::size_t n, Threshold value) {
    return ThresholdAssignment(std::vector<Threshold>(n, value));
}

}  // namespace seedset::testing
