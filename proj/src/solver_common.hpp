#pragma once

#include <string>

#include "seedset/activation.hpp"
#include "seedset/error.hpp"
#include "seedset/solvers.hpp"

namespace seedset::detail {

// Every node is selected at most twice: once into limbo, once out of U.
inline void check_iteration_bound(const Digraph& g, const TargetSetResult& r, const char* solver) {
    if (r.iterations > 2 * g.num_nodes())
        throw InvariantViolation(std::string(solver) + ": " + std::to_string(r.iterations) +
                                 " iterations exceed 2n = " + std::to_string(2 * g.num_nodes()));
}

inline void check_target_set(const Digraph& g, const ThresholdAssignment& t, const TargetSetResult& r,
                             const char* solver) {
    if (!is_target_set(g, t, r.seeds)) throw InvariantViolation(std::string(solver) + ": output is not a target set");
}

}  // namespace seedset::detail
