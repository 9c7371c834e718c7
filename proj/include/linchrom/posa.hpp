#pragma once

// Pósa rotation-extension search for Hamilton paths (and long paths) within
// an induced vertex set, with one-at-a-time sprinkle edge exposure.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linchrom/colouring.hpp"
#include "linchrom/graph.hpp"

namespace linchrom {

struct PosaParams {
    int max_rotations_per_phase = 256;
    int max_restarts = 24;
    std::string booster_policy = "ordered"; // sprinkle edges consumed in the given order
    RngSeed seed = 0;
};

struct PosaStats {
    int sprinkle_consumed = 0;
    int sprinkle_accepted = 0; // consumed edges that led to a longer path
    int restarts_used = 0;
    int best_path_vertices = 0;
};

// Hamilton path on s in G[s] (plus accepted sprinkle edges), or nullopt when
// the budgets are exhausted. Failure is an absent result, never an exception.
std::optional<PathWitness> posa_hamilton_path(const Graph& g, const std::vector<int>& s,
                                              const std::vector<Edge>& sprinkle,
                                              const PosaParams& params,
                                              PosaStats* stats = nullptr);

// Same engine, but always reports the best path found.
PathWitness longest_path_found(const Graph& g, const std::vector<int>& s,
                               const std::vector<Edge>& sprinkle, const PosaParams& params,
                               PosaStats* stats = nullptr);

} // namespace linchrom
