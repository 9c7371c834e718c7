#pragma once

// Undirected simple graphs on vertex set 0..n-1. Adjacency is kept as sorted
// neighbour lists plus bitset matrix rows when the graph is small or dense
// (the matrix is dropped automatically below 1% density at large n).

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "linchrom/errors.hpp"

namespace linchrom {

using RngSeed = std::uint64_t;
using Edge = std::pair<int, int>;

class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, const std::vector<Edge>& edges);

    int vertex_count() const { return n_; }
    long long edge_count() const { return m_; }
    double density() const;

    const std::vector<int>& neighbours(int v) const;
    int degree(int v) const;
    bool has_edge(int u, int v) const;
    std::vector<Edge> edges() const;

    bool operator==(const Graph& other) const { return n_ == other.n_ && adj_ == other.adj_; }

private:
    int n_ = 0;
    long long m_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::uint64_t> bits_; // matrix rows, empty in sparse mode
    std::size_t row_words_ = 0;

    void build_bits();
    void check_vertex(int v) const;
};

struct TwoRoundSample {
    Graph g1, g2, g_union;
    double p1 = 0.0;
    double p2 = 0.0;
};

// G(n,p): each of the C(n,2) pairs appears independently with probability p,
// deterministically in `seed`.
Graph sample_gnp(int n, double p, RngSeed seed);

// Two-round exposure with p = p1 + p2 - p1*p2. By default p1 = p2 =
// 1 - sqrt(1-p); pass p1_override (e.g. p/2) to split asymmetrically.
TwoRoundSample sample_two_round(int n, double p, RngSeed seed,
                                std::optional<double> p1_override = std::nullopt);

// graph6 (the standard 63-offset format, upper triangle by columns).
Graph parse_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

// Partition of 0..n-1 into connected components; each component sorted, the
// list ordered by smallest member.
std::vector<std::vector<int>> components(const Graph& g);

// Largest shortest-path edge distance within comp. comp must be a connected
// component of g (checked; ContractError otherwise).
int diameter(const Graph& g, const std::vector<int>& comp);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> vertex_map; // local index -> vertex of the host graph
};
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& s);

// One canonical graph6 string per isomorphism class of connected graphs on
// n vertices; supported for n <= 6 (larger corpora come from geng et al.).
std::vector<std::string> all_connected_graph6(int n);

} // namespace linchrom
