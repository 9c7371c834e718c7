#pragma once

// Colourings and the three verifiers (proper / linear / centred) with
// witnesses, plus exact chi, chi_lin and tree-depth (= chi_cen) solvers for
// small graphs and the closed-form path values.

#include <cstdint>
#include <optional>
#include <vector>

#include "linchrom/graph.hpp"

namespace linchrom {

// one colour id per vertex; ids need not be contiguous
using Colouring = std::vector<int>;

struct PathWitness {
    std::vector<int> vertices; // consecutive entries adjacent, all distinct

    bool operator==(const PathWitness& o) const { return vertices == o.vertices; }
};

// Hard caps for the exponential solvers; exceeding a cap raises
// SizeGuardError instead of running forever.
struct SolverLimits {
    int find_path_max_n = 14;
    int centred_max_n = 16;
    int chromatic_max_n = 16;
    int linear_max_n = 11;
    int tree_depth_max_n = 62;
    int tree_depth_max_component = 22;
};

bool is_proper(const Graph& g, const Colouring& phi);

// Smallest vertex of s whose colour is unique within s, if any. s non-empty.
std::optional<int> has_centre(const Colouring& phi, const std::vector<int>& s);

// A simple path with no centre (witnessing that phi is not linear), or
// nullopt when phi is linear. Exhaustive DFS from each start vertex in
// increasing index; no unsound pruning.
std::optional<PathWitness> find_path_without_centre(const Graph& g, const Colouring& phi,
                                                    const SolverLimits& limits = {});

// nullopt when phi is centred; otherwise a minimum-cardinality connected
// vertex set without a centre.
std::optional<std::vector<int>> is_centred(const Graph& g, const Colouring& phi,
                                           const SolverLimits& limits = {});

int chromatic_number(const Graph& g, const SolverLimits& limits = {});
int linear_chromatic_number(const Graph& g, const SolverLimits& limits = {});
int tree_depth(const Graph& g, const SolverLimits& limits = {}); // = chi_cen

// floor(log2 k) + 1, the centred (= linear) chromatic number of the path on
// k vertices. k >= 1.
int path_centred_value(std::uint64_t k);

// max over components C of path_centred_value(diam(C)+1); a shortest path
// realising the diameter is a path subgraph on diam+1 vertices, so this
// bounds chi_lin from below (and dominates log2(diam)).
int linear_lower_bound_from_diameter(const Graph& g);

// serialisation used by the CLI and fixtures
std::string format_colouring(const Colouring& phi);       // comma-separated
Colouring parse_colouring(std::string_view text);         // "0,1,2"
std::string format_path(const std::vector<int>& vertices); // whitespace-separated

} // namespace linchrom
