#include <doctest.h>

#include <cmath>
#include <set>

#include "linchrom/graph.hpp"
#include "linchrom/rng.hpp"
#include "oracles.hpp"

using namespace linchrom;

TEST_SUITE_BEGIN("graph");

namespace {

void check_invariants(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        CHECK_FALSE(g.has_edge(v, v));
        for (int u : g.neighbours(v)) {
            CHECK(u >= 0);
            CHECK(u < g.vertex_count());
            CHECK(g.has_edge(u, v));
            CHECK(g.has_edge(v, u));
        }
    }
}

} // namespace

TEST_CASE("sample_gnp extremes") {
    Graph empty = sample_gnp(5, 0.0, 123);
    CHECK(empty.vertex_count() == 5);
    CHECK(empty.edge_count() == 0);

    Graph full = sample_gnp(5, 1.0, 123);
    CHECK(full.edge_count() == 10);
    check_invariants(full);

    CHECK_THROWS_AS(sample_gnp(5, -0.1, 1), ParameterError);
    CHECK_THROWS_AS(sample_gnp(5, 1.5, 1), ParameterError);
    CHECK_THROWS_AS(sample_gnp(5, std::nan(""), 1), ParameterError);
    CHECK_THROWS_AS(sample_gnp(-1, 0.5, 1), ParameterError);
}

TEST_CASE("sample_gnp edge count within 4 sigma") {
    // Bin(C(1000,2), 0.01): mean 4995, sigma = sqrt(4995*0.99)
    Graph g = sample_gnp(1000, 0.01, 42);
    const double mean = 4995.0;
    const double sigma = std::sqrt(mean * 0.99);
    CHECK(std::abs(static_cast<double>(g.edge_count()) - mean) <= 4.0 * sigma);
    check_invariants(g);
}

TEST_CASE("sample_gnp deterministic in the seed") {
    Graph a = sample_gnp(300, 0.05, 7);
    Graph b = sample_gnp(300, 0.05, 7);
    Graph c = sample_gnp(300, 0.05, 8);
    CHECK(a == b);
    CHECK_FALSE(a == c);
}

TEST_CASE("two-round exposure") {
    TwoRoundSample zero = sample_two_round(10, 0.0, 5);
    CHECK(zero.g1.edge_count() == 0);
    CHECK(zero.g2.edge_count() == 0);
    CHECK(zero.g_union.edge_count() == 0);

    TwoRoundSample one = sample_two_round(10, 1.0, 5);
    CHECK(one.g_union.edge_count() == 45);
    CHECK(one.p1 == doctest::Approx(1.0));

    TwoRoundSample t = sample_two_round(50, 0.4, 99);
    CHECK(t.p1 == doctest::Approx(t.p2));
    CHECK(t.p1 + t.p2 - t.p1 * t.p2 == doctest::Approx(0.4));
    // union edge set = union of the rounds
    for (int v = 0; v < 50; ++v)
        for (int u = v + 1; u < 50; ++u)
            CHECK(t.g_union.has_edge(v, u) == (t.g1.has_edge(v, u) || t.g2.has_edge(v, u)));
    check_invariants(t.g_union);

    TwoRoundSample split = sample_two_round(50, 0.2, 1, 0.1);
    CHECK(split.p1 == doctest::Approx(0.1));
    CHECK(split.p1 + split.p2 - split.p1 * split.p2 == doctest::Approx(0.2));
    CHECK_THROWS_AS(sample_two_round(10, 0.2, 1, 0.5), ParameterError);
    CHECK_THROWS_AS(sample_two_round(10, 1.5, 1), ParameterError);
}

TEST_CASE("two-round union density matches p over 200 trials") {
    const int n = 200;
    const double p = 0.3;
    const double pairs_per_trial = n * (n - 1) / 2.0;
    long long total = 0;
    for (int trial = 0; trial < 200; ++trial)
        total += sample_two_round(n, p, derive_stream_seed(7, trial)).g_union.edge_count();
    const double mean = 200.0 * pairs_per_trial * p;
    const double sigma = std::sqrt(200.0 * pairs_per_trial * p * (1 - p));
    CHECK(std::abs(static_cast<double>(total) - mean) <= 4.0 * sigma);
}

TEST_CASE("graph6 hand-computed values") {
    Graph k2 = parse_graph6("A_");
    CHECK(k2.vertex_count() == 2);
    CHECK(k2.edge_count() == 1);
    CHECK(k2.has_edge(0, 1));
    CHECK(encode_graph6(k2) == "A_");

    Graph k3 = parse_graph6("Bw");
    CHECK(k3.vertex_count() == 3);
    CHECK(k3.edge_count() == 3);
    CHECK(encode_graph6(k3) == "Bw");

    CHECK(parse_graph6("?").vertex_count() == 0);
    CHECK(encode_graph6(Graph(0)) == "?");
}

TEST_CASE("graph6 round-trip on random graphs") {
    for (int i = 0; i < 100; ++i) {
        int n = 1 + static_cast<int>(derive_stream_seed(1000, i) % 20);
        double p = 0.1 + 0.8 * static_cast<double>(i) / 100.0;
        Graph g = sample_gnp(n, p, derive_stream_seed(2000, i));
        CHECK(parse_graph6(encode_graph6(g)) == g);
    }
    // a large-n header (3-byte form)
    Graph big(100, {{0, 99}, {5, 42}});
    CHECK(parse_graph6(encode_graph6(big)) == big);
}

TEST_CASE("graph6 parse errors carry byte offsets") {
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("B"), ParseError);     // truncated bits
    CHECK_THROWS_AS(parse_graph6("A_x"), ParseError);   // trailing
    CHECK_THROWS_AS(parse_graph6("A "), ParseError);    // invalid char
    CHECK_THROWS_AS(parse_graph6("Ao"), ParseError);    // nonzero padding
    try {
        parse_graph6("A ");
    } catch (const ParseError& e) {
        CHECK(e.offset == 1);
    }
}

TEST_CASE("components") {
    CHECK(components(Graph(3)) ==
          std::vector<std::vector<int>>{{0}, {1}, {2}});
    CHECK(components(oracle::complete_graph(4)) == std::vector<std::vector<int>>{{0, 1, 2, 3}});
    Graph p3_plus_isolated(4, {{0, 1}, {1, 2}});
    CHECK(components(p3_plus_isolated) == std::vector<std::vector<int>>{{0, 1, 2}, {3}});
}

TEST_CASE("components form a partition on random graphs") {
    for (int i = 0; i < 20; ++i) {
        Graph g = sample_gnp(60, 0.03, derive_stream_seed(3000, i));
        auto comps = components(g);
        std::set<int> all;
        for (const auto& comp : comps) {
            CHECK(!comp.empty());
            CHECK(std::is_sorted(comp.begin(), comp.end()));
            for (int v : comp) CHECK(all.insert(v).second); // disjoint
            // no edges leave the component
            std::set<int> inside(comp.begin(), comp.end());
            for (int v : comp)
                for (int u : g.neighbours(v)) CHECK(inside.count(u) == 1);
        }
        CHECK(static_cast<int>(all.size()) == g.vertex_count());
    }
}

TEST_CASE("diameter") {
    auto whole = [](const Graph& g) { return components(g).at(0); };
    CHECK(diameter(oracle::path_graph(5), whole(oracle::path_graph(5))) == 4);
    CHECK(diameter(oracle::complete_graph(4), whole(oracle::complete_graph(4))) == 1);
    CHECK(diameter(oracle::cycle_graph(6), whole(oracle::cycle_graph(6))) == 3);
    for (int k = 2; k <= 10; ++k)
        CHECK(diameter(oracle::path_graph(k), whole(oracle::path_graph(k))) == k - 1);

    Graph split(5, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(diameter(split, {0, 1, 2, 3}), ContractError); // not connected
    CHECK_THROWS_AS(diameter(oracle::path_graph(4), {0, 1}), ContractError); // not maximal
    CHECK_THROWS_AS(diameter(split, {}), ParameterError);
}

TEST_CASE("induced subgraphs") {
    InducedSubgraph k3 = induced_subgraph(oracle::complete_graph(5), {0, 1, 2});
    CHECK(k3.graph == oracle::complete_graph(3));
    CHECK(k3.vertex_map == std::vector<int>{0, 1, 2});

    InducedSubgraph none = induced_subgraph(oracle::complete_graph(5), {});
    CHECK(none.graph.vertex_count() == 0);

    InducedSubgraph p3 = induced_subgraph(oracle::cycle_graph(5), {0, 1, 2});
    CHECK(p3.graph == oracle::path_graph(3));

    CHECK_THROWS_AS(induced_subgraph(oracle::complete_graph(3), {0, 7}), ParameterError);
}

TEST_CASE("graph construction rejects bad edges") {
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), ParameterError);
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), ParameterError);
    CHECK(Graph(3, {{0, 1}, {1, 0}, {0, 1}}).edge_count() == 1); // dedupe
}

TEST_CASE("exhaustive connected corpora have the known sizes") {
    CHECK(all_connected_graph6(1).size() == 1);
    CHECK(all_connected_graph6(2).size() == 1);
    CHECK(all_connected_graph6(3).size() == 2);
    CHECK(all_connected_graph6(4).size() == 6);
    CHECK(all_connected_graph6(5).size() == 21);
    CHECK(all_connected_graph6(6).size() == 112);
    CHECK_THROWS_AS(all_connected_graph6(7), SizeGuardError);
    for (const auto& g6 : all_connected_graph6(5)) {
        Graph g = parse_graph6(g6);
        CHECK(components(g).size() == 1);
    }
}

TEST_SUITE_END();
