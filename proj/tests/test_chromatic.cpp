#include <doctest.h>

#include <algorithm>
#include <set>

#include "linchrom/colouring.hpp"
#include "linchrom/rng.hpp"
#include "oracles.hpp"

using namespace linchrom;
using oracle::complete_graph;
using oracle::cycle_graph;
using oracle::path_graph;

TEST_SUITE_BEGIN("chromatic");

TEST_CASE("is_proper") {
    CHECK(is_proper(complete_graph(3), {0, 1, 2}));
    CHECK_FALSE(is_proper(complete_graph(3), {0, 0, 1}));
    CHECK(is_proper(Graph(4), {0, 0, 0, 0}));
    CHECK_THROWS_AS(is_proper(complete_graph(3), {0, 1}), ParameterError);
}

TEST_CASE("has_centre") {
    CHECK(has_centre({1, 2, 1}, {0, 1, 2}) == 1);
    CHECK_FALSE(has_centre({1, 2, 1, 2}, {0, 1, 2, 3}).has_value());
    CHECK(has_centre({5, 5, 7}, {0}) == 0); // singleton is its own centre
    CHECK_THROWS_AS(has_centre({1, 2}, {}), ParameterError);
    CHECK_THROWS_AS(has_centre({1, 2}, {5}), ParameterError);
}

TEST_CASE("find_path_without_centre examples") {
    auto bad = find_path_without_centre(path_graph(4), {1, 2, 1, 2});
    REQUIRE(bad.has_value());
    std::vector<int> verts = bad->vertices;
    std::sort(verts.begin(), verts.end());
    CHECK(verts == std::vector<int>{0, 1, 2, 3}); // the full path is the only bad one

    CHECK_FALSE(find_path_without_centre(path_graph(3), {1, 2, 1}).has_value());
    CHECK_FALSE(find_path_without_centre(complete_graph(3), {1, 2, 3}).has_value());

    SolverLimits tight;
    tight.find_path_max_n = 5;
    CHECK_THROWS_AS(find_path_without_centre(path_graph(6), {0, 1, 2, 3, 4, 5}, tight),
                    SizeGuardError);
}

TEST_CASE("find_path witnesses agree with the naive enumerator") {
    for (int i = 0; i < 120; ++i) {
        int n = 2 + static_cast<int>(derive_stream_seed(11, i) % 7); // 2..8
        double p = 0.15 + 0.1 * static_cast<double>(i % 8);
        Graph g = sample_gnp(n, p, derive_stream_seed(12, i));
        Colouring phi(static_cast<std::size_t>(n));
        SplitMix64 rng(derive_stream_seed(13, i));
        int classes = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
        for (int v = 0; v < n; ++v)
            phi[static_cast<std::size_t>(v)] =
                static_cast<int>(rng.next_below(static_cast<std::uint64_t>(classes)));

        auto mine = find_path_without_centre(g, phi);
        auto naive = oracle::any_bad_path(g, phi);
        CHECK(mine.has_value() == naive.has_value());
        if (mine) {
            // witness soundness: a simple path whose set has no centre
            const auto& path = mine->vertices;
            CHECK(path.size() >= 2);
            std::set<int> distinct(path.begin(), path.end());
            CHECK(distinct.size() == path.size());
            for (std::size_t j = 0; j + 1 < path.size(); ++j)
                CHECK(g.has_edge(path[j], path[j + 1]));
            CHECK_FALSE(has_centre(phi, path).has_value());
        }
    }
}

TEST_CASE("is_centred examples") {
    CHECK_FALSE(is_centred(cycle_graph(4), {0, 1, 2, 3}).has_value()); // all distinct
    CHECK(is_centred(cycle_graph(4), {1, 2, 1, 2}) == std::vector<int>{0, 1, 2, 3});
    CHECK(is_centred(complete_graph(2), {1, 1}) == std::vector<int>{0, 1});
    SolverLimits tight;
    tight.centred_max_n = 3;
    CHECK_THROWS_AS(is_centred(path_graph(4), {0, 1, 2, 3}, tight), SizeGuardError);
}

TEST_CASE("is_centred returns a minimum-cardinality violating set") {
    // triangle coloured (1,2,1): {0,2} is connected and centre-free
    Graph g(3, {{0, 1}, {1, 2}, {0, 2}});
    auto witness = is_centred(g, {1, 2, 1});
    REQUIRE(witness.has_value());
    CHECK(*witness == std::vector<int>{0, 2});
}

TEST_CASE("chromatic_number") {
    CHECK(chromatic_number(complete_graph(4)) == 4);
    CHECK(chromatic_number(cycle_graph(5)) == 3);
    CHECK(chromatic_number(path_graph(6)) == 2);
    CHECK(chromatic_number(Graph(4)) == 1);
    CHECK(chromatic_number(Graph(0)) == 0);
    CHECK(chromatic_number(oracle::star_graph(5)) == 2);
    CHECK(chromatic_number(cycle_graph(6)) == 2);
}

TEST_CASE("linear_chromatic_number") {
    CHECK(linear_chromatic_number(path_graph(8)) == 4);
    CHECK(linear_chromatic_number(complete_graph(4)) == 4);
    CHECK(linear_chromatic_number(cycle_graph(4)) == 3);
    CHECK(oracle::chi_lin_by_enumeration(cycle_graph(4)) == 3);
    SolverLimits tight;
    tight.linear_max_n = 4;
    CHECK_THROWS_AS(linear_chromatic_number(path_graph(5), tight), SizeGuardError);
}

TEST_CASE("linear_chromatic_number matches exhaustive enumeration on small graphs") {
    for (int i = 0; i < 25; ++i) {
        int n = 2 + static_cast<int>(derive_stream_seed(21, i) % 4); // 2..5
        Graph g = sample_gnp(n, 0.5, derive_stream_seed(22, i));
        CHECK(linear_chromatic_number(g) == oracle::chi_lin_by_enumeration(g));
    }
    // every connected graph up to n = 6 (catches state-leak bugs that only
    // show on particular shapes, e.g. K_{3,3})
    for (int n = 1; n <= 6; ++n)
        for (const auto& g6 : all_connected_graph6(n)) {
            Graph g = parse_graph6(g6);
            CHECK(linear_chromatic_number(g) == oracle::chi_lin_by_enumeration(g));
        }
}

TEST_CASE("K_{3,3} needs four colours for a linear colouring") {
    Graph k33 = parse_graph6("EFz_");
    CHECK(chromatic_number(k33) == 2);
    CHECK(linear_chromatic_number(k33) == 4);
    CHECK(tree_depth(k33) == 4);
}

TEST_CASE("tree_depth") {
    CHECK(tree_depth(path_graph(8)) == 4);
    CHECK(tree_depth(complete_graph(5)) == 5);
    CHECK(tree_depth(cycle_graph(4)) == 3);
    CHECK(tree_depth(Graph(3)) == 1);
    CHECK(tree_depth(Graph(0)) == 0);
    SolverLimits tight;
    tight.tree_depth_max_component = 3;
    CHECK_THROWS_AS(tree_depth(path_graph(5), tight), SizeGuardError);
}

TEST_CASE("tree_depth equals the elimination-ordering oracle for n <= 7") {
    CHECK(tree_depth(oracle::star_graph(6)) ==
          oracle::tree_depth_by_orderings(oracle::star_graph(6)));
    CHECK(tree_depth(cycle_graph(7)) == oracle::tree_depth_by_orderings(cycle_graph(7)));
    for (int i = 0; i < 30; ++i) {
        int n = 1 + static_cast<int>(derive_stream_seed(31, i) % 7); // 1..7
        double p = 0.1 + 0.12 * static_cast<double>(i % 7);
        Graph g = sample_gnp(n, p, derive_stream_seed(32, i));
        CHECK(tree_depth(g) == oracle::tree_depth_by_orderings(g));
    }
}

TEST_CASE("path_centred_value") {
    CHECK(path_centred_value(1) == 1);
    CHECK(path_centred_value(7) == 3);
    CHECK(path_centred_value(8) == 4);
    CHECK(path_centred_value(1ULL << 20) == 21);
    CHECK_THROWS_AS(path_centred_value(0), ParameterError);
}

TEST_CASE("linear_lower_bound_from_diameter") {
    CHECK(linear_lower_bound_from_diameter(path_graph(9)) == 4);
    CHECK(linear_lower_bound_from_diameter(complete_graph(4)) == 2);
    CHECK(linear_lower_bound_from_diameter(Graph(5)) == 1);
    CHECK(linear_lower_bound_from_diameter(Graph(0)) == 0);
}

TEST_CASE("sandwich chain and lower-bound consistency on small graphs") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& g6 : all_connected_graph6(n)) {
            Graph g = parse_graph6(g6);
            int chi = chromatic_number(g);
            int lin = linear_chromatic_number(g);
            int cen = tree_depth(g);
            CHECK(chi <= lin);
            CHECK(lin <= cen);
            CHECK(linear_lower_bound_from_diameter(g) <= lin);
        }
    for (int i = 0; i < 25; ++i) {
        int n = 1 + static_cast<int>(derive_stream_seed(41, i) % 8); // 1..8
        Graph g = sample_gnp(n, 0.35, derive_stream_seed(42, i));
        int chi = chromatic_number(g);
        int lin = linear_chromatic_number(g);
        int cen = tree_depth(g);
        CHECK(chi <= lin);
        CHECK(lin <= cen);
        CHECK(linear_lower_bound_from_diameter(g) <= lin);
    }
}

TEST_CASE("path equality for k = 1..8") {
    for (int k = 1; k <= 8; ++k) {
        Graph p = path_graph(k);
        int expected = path_centred_value(static_cast<std::uint64_t>(k));
        CHECK(tree_depth(p) == expected);
        CHECK(linear_chromatic_number(p) == expected);
    }
}

TEST_CASE("subgraph monotonicity of chi_lin") {
    for (int i = 0; i < 50; ++i) {
        int n = 3 + static_cast<int>(derive_stream_seed(51, i) % 6); // 3..8
        Graph g = sample_gnp(n, 0.5, derive_stream_seed(52, i));
        // random subgraph: drop some vertices, then some edges
        SplitMix64 rng(derive_stream_seed(53, i));
        std::vector<int> keep;
        for (int v = 0; v < n; ++v)
            if (rng.next_below(4) != 0) keep.push_back(v);
        if (keep.empty()) keep.push_back(0);
        InducedSubgraph sub = induced_subgraph(g, keep);
        std::vector<Edge> kept_edges;
        for (auto e : sub.graph.edges())
            if (rng.next_below(5) != 0) kept_edges.push_back(e);
        Graph h(sub.graph.vertex_count(), kept_edges);
        CHECK(linear_chromatic_number(h) <= linear_chromatic_number(g));
    }
}

TEST_CASE("colouring and path text forms") {
    CHECK(format_colouring({0, 1, 2}) == "0,1,2");
    CHECK(parse_colouring("0,1,2") == Colouring{0, 1, 2});
    CHECK(parse_colouring("") == Colouring{});
    CHECK_THROWS_AS(parse_colouring("0,,2"), ParseError);
    CHECK_THROWS_AS(parse_colouring("0,x"), ParseError);
    CHECK(format_path({3, 1, 2}) == "3 1 2");
}

TEST_SUITE_END();
