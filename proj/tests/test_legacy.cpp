#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "freedist/distances.hpp"
#include "helpers.hpp"

using namespace freedist;
using tests::fig1_code;
using tests::fig8_graph;
using tests::heapmod_counterexample;

TEST_CASE("heapmod values") {
    CHECK(heapmod_free_distance(heapmod_counterexample()) == 9);  // true answer is 8
    CHECK(heapmod_free_distance(fig1_code()) == 3);
    HeapmodOptions full;
    full.full_table = true;
    CHECK(heapmod_free_distance(heapmod_counterexample(), full) == 9);
    CHECK(heapmod_free_distance(fig1_code(), full) == 3);
}

TEST_CASE("heapmod rejects unsupported codes") {
    const auto k2 = make_matrix(small_field(2), {{{1}, {0}, {0, 1}}, {{0}, {1}, {1, 1}}});
    CHECK_THROWS_AS(heapmod_free_distance(k2), UnsupportedRate);
    const auto q3 = make_matrix(small_field(3), {{{1, 2}, {2}}});
    CHECK_THROWS_AS(heapmod_free_distance(q3), UnsupportedRate);
}

TEST_CASE("heapmod explores inputs no longer than M + 2") {
    for (int M = 1; M <= 8; ++M) {
        CHECK(heapmod_explored_input_length(M) == M + 2);
        // Structural: path from l_j to the root has at most 2M+2 nodes, of
        // which the last M are the zero tail, leaving at most M+2 inputs.
        int longest = 0;
        for (std::uint64_t j = 0; j < (1ull << (M + 1)); ++j) {
            const std::uint64_t lj = (2 * j + 1) << M;
            int nodes = 0;
            for (std::uint64_t i = lj; i >= 1; i >>= 1) ++nodes;
            longest = std::max(longest, nodes - M);
        }
        CHECK(longest <= M + 2);
    }
}

TEST_CASE("heapmod never undershoots the true free distance") {
    const auto codes = tests::binary_1n_codes(20, 1, 5, 83);
    bool strict_somewhere = false;
    for (const auto& G : codes) {
        const int h = heapmod_free_distance(G);
        const int ref = dijkstra_free_distance(G);
        CHECK(h >= ref);
        strict_somewhere = strict_somewhere || h > ref;
    }
    // The bundled counterexample is strictly above.
    CHECK(heapmod_free_distance(heapmod_counterexample()) > dijkstra_free_distance(heapmod_counterexample()));
}

TEST_CASE("larsen values") {
    CHECK(larsen_free_distance(fig1_code(), 100).first == 3);  // appendix code (z^2+1, z^2)
    CHECK(larsen_free_distance(fig1_code(), 6).first == 3);
    CHECK(larsen_free_distance(heapmod_counterexample(), 14).first == 8);
}

TEST_CASE("larsen equals the oracle on binary 1/n codes") {
    const auto codes = tests::binary_1n_codes(25, 1, 5, 89);
    for (const auto& G : codes) {
        const int w0 = singleton_bound(static_cast<int>(G.n), 1, row_degrees(G)[0]);
        CHECK(larsen_free_distance(G, w0).first == dijkstra_free_distance(G));
    }
}

TEST_CASE("larsen rejects unsupported inputs") {
    const auto k2 = make_matrix(small_field(2), {{{1}, {0}, {0, 1}}, {{0}, {1}, {1, 1}}});
    CHECK_THROWS_AS(larsen_free_distance(k2, 10), UnsupportedRate);
    CHECK_THROWS_AS(larsen_free_distance(tests::catastrophic_code(), 10), Catastrophic);
    CHECK_THROWS_AS(larsen_free_distance(fig1_code(), 0), BadBound);
}

TEST_CASE("larsen on the weighted digraph stops early") {
    const auto g = fig8_graph();
    CHECK(larsen_on_graph(g, 100) == 13);
    CHECK(graph_shortest_zero_cycle(g) == 12);
}

TEST_CASE("malformed diagrams are rejected") {
    auto g = fig8_graph();
    g.edges.pop_back();  // drop 01 -> 00
    CHECK_THROWS_AS(larsen_on_graph(g, 100), MalformedDiagram);

    auto dup = fig8_graph();
    dup.edges.push_back({"00", "10", 5});
    CHECK_THROWS_AS(larsen_on_graph(dup, 100), MalformedDiagram);

    auto bad = fig8_graph();
    bad.edges.back() = {"01", "11", 1};  // not a register shift
    CHECK_THROWS_AS(larsen_on_graph(bad, 100), MalformedDiagram);

    auto vshape = fig8_graph();
    vshape.vertices.pop_back();
    CHECK_THROWS_AS(larsen_on_graph(vshape, 100), MalformedDiagram);
}

TEST_CASE("graph runner with code weights matches the code runner") {
    const auto codes = tests::binary_1n_codes(6, 2, 4, 97);
    for (const auto& G : codes) {
        const Trellis T(G);
        const int M = T.memory();
        WeightedDigraph g;
        g.zero = std::string(static_cast<std::size_t>(M), '0');
        for (std::uint64_t s = 0; s < T.num_states(); ++s) {
            std::string label;
            for (int c = 0; c < M; ++c) label += ((s >> c) & 1) ? '1' : '0';
            g.vertices.push_back(label);
        }
        for (std::uint64_t s = 0; s < T.num_states(); ++s)
            for (std::uint64_t u = 0; u < 2; ++u) {
                const auto e = T.forward_step(s, u);
                g.edges.push_back({g.vertices[static_cast<std::size_t>(s)],
                                   g.vertices[static_cast<std::size_t>(e.state)], e.weight});
            }
        const int w0 = singleton_bound(static_cast<int>(G.n), 1, M);
        CHECK(larsen_on_graph(g, w0, static_cast<int>(G.n)) == larsen_free_distance(G, w0).first);
    }
}

TEST_CASE("green blue path property") {
    CHECK(green_blue_property(fig1_code()));
    CHECK(green_blue_property(heapmod_counterexample()));
    const auto codes = tests::binary_1n_codes(50, 2, 6, 101);
    for (const auto& G : codes) CHECK(green_blue_property(G));
    CHECK_THROWS_AS(green_blue_property(make_matrix(small_field(2), {{{1, 1}, {0, 1}}})), UnsupportedRate);
}
