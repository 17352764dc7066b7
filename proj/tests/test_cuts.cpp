#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "oddhole/cuts.hpp"
#include "oddhole/generators.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace oddhole;

TEST_CASE("degree_two_vertices") {
    CHECK(degree_two_vertices(gen_cycle(9)).size() == 9);
    CHECK(degree_two_vertices(petersen()).empty());
    CHECK(degree_two_vertices(gen_theta(4, 5, 5)).size() == 11);
}

TEST_CASE("two_edge_cuts named examples") {
    CHECK(two_edge_cuts(gen_cycle(4)).size() == 6);  // every pair disconnects C4
    CHECK(two_edge_cuts(petersen()).empty());        // 3-edge-connected

    // two triangles joined by one edge: every pair containing the bridge
    // disconnects, and so does any triangle pair that strands a degree-2
    // vertex or the bridge-free edge (the brute-force oracle agrees)
    Graph bowtie = Graph::build(
        6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
    auto cuts = two_edge_cuts(bowtie);
    int with_bridge = 0;
    for (const auto& w : cuts)
        for (const auto& e : w.edges)
            if (e == Edge{2, 3}) ++with_bridge;
    CHECK(with_bridge == 6);  // all six bridge pairs are cuts
    CHECK(cuts.size() == oracle::two_edge_cut_pairs(bowtie).size());
    CHECK(cuts.size() == 12);
}

TEST_CASE("k2 and p3 cuts named examples") {
    // K4 minus one edge: the opposite pair is the only K2-cut
    Graph diamond = Graph::build(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    auto k2 = k2_cuts(diamond);
    REQUIRE(k2.size() == 1);
    CHECK(k2[0].vertices == std::vector<int>{0, 1});

    // the five-vertex fixture with P3-cut {a,b,c}
    Graph g = Graph::build(5, {{0, 1}, {1, 2}, {3, 0}, {3, 1}, {4, 1}, {4, 2}});
    auto p3 = p3_cuts(g);
    bool found = false;
    for (const auto& w : p3) {
        std::vector<int> t = w.vertices;
        std::sort(t.begin(), t.end());
        if (t == std::vector<int>{0, 1, 2}) found = true;
        CHECK(w.component_count > 1);
    }
    CHECK(found);

    CHECK(k2_cuts(petersen()).empty());
    CHECK(p3_cuts(petersen()).empty());
}

TEST_CASE("cut detectors demand connected input") {
    Graph disc = fixtures::disjoint_c5_c5();
    CHECK_THROWS_AS(two_edge_cuts(disc), std::invalid_argument);
    CHECK_THROWS_AS(k2_cuts(disc), std::invalid_argument);
    CHECK_THROWS_AS(p3_cuts(disc), std::invalid_argument);
}

TEST_CASE("cut detectors match the try-all-candidates oracles on n <= 12") {
    for (const auto& f : fixtures::cut_fixtures()) {
        CAPTURE(f.name);
        const Graph& g = f.graph;

        std::set<std::pair<Edge, Edge>> got_tec;
        for (const auto& w : two_edge_cuts(g)) {
            auto a = w.edges[0], b = w.edges[1];
            got_tec.insert(a < b ? std::pair{a, b} : std::pair{b, a});
        }
        CHECK(got_tec == oracle::two_edge_cut_pairs(g));

        std::set<std::vector<int>> got_k2;
        for (const auto& w : k2_cuts(g)) got_k2.insert(w.vertices);
        CHECK(got_k2 == oracle::k2_cut_pairs(g));

        std::set<std::vector<int>> got_p3;
        for (const auto& w : p3_cuts(g)) {
            std::vector<int> t = w.vertices;
            std::sort(t.begin(), t.end());
            got_p3.insert(t);
        }
        CHECK(got_p3 == oracle::p3_cut_triples(g));
    }
}

TEST_CASE("every emitted witness re-verifies by direct component counting") {
    for (const auto& f : fixtures::cut_fixtures()) {
        const Graph& g = f.graph;
        for (const auto& w : two_edge_cuts(g)) {
            CHECK(oracle::component_count_after(g, {}, w.edges) == w.component_count);
            CHECK(w.component_count > 1);
        }
        for (const auto& w : k2_cuts(g)) {
            CHECK(g.has_edge(w.vertices[0], w.vertices[1]));
            CHECK(oracle::component_count_after(g, w.vertices, {}) == w.component_count);
        }
        for (const auto& w : p3_cuts(g)) {
            CHECK(g.has_edge(w.vertices[0], w.vertices[1]));
            CHECK(g.has_edge(w.vertices[1], w.vertices[2]));
            CHECK_FALSE(g.has_edge(w.vertices[0], w.vertices[2]));
            CHECK(oracle::component_count_after(g, w.vertices, {}) == w.component_count);
        }
    }
}

TEST_CASE("vertex criticality") {
    SearchBudget b1;
    auto c9 = is_k_vertex_critical(gen_cycle(9), 3, b1);
    CHECK(c9.critical());
    CHECK(c9.deletion_colorings.size() == 9);
    for (const auto& col : c9.deletion_colorings) CHECK(col.k == 2);

    SearchBudget b2;
    auto pet = is_k_vertex_critical(petersen(), 3, b2);
    CHECK(pet.status == CriticalityVerdict::Status::NotCritical);
    CHECK(pet.failing_vertex.has_value());

    SearchBudget b3;
    CHECK(is_k_vertex_critical(fixtures::complete(4), 4, b3).critical());

    // chi mismatch cases
    SearchBudget b4;
    CHECK(is_k_vertex_critical(gen_cycle(8), 3, b4).status ==
          CriticalityVerdict::Status::NotCritical);  // bipartite
    SearchBudget b5;
    CHECK(is_k_vertex_critical(fixtures::complete(5), 4, b5).status ==
          CriticalityVerdict::Status::NotCritical);  // chi too large
}
