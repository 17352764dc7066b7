#pragma once

// Deterministic fixture graphs shared by the oracle-equivalence tests.

#include <random>
#include <string>
#include <vector>

#include "oddhole/generators.hpp"
#include "oddhole/graph.hpp"

namespace fixtures {

using oddhole::Edge;
using oddhole::Graph;

struct Named {
    std::string name;
    Graph graph;
};

inline Graph complete(int n) {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
    return Graph::build(n, es);
}

inline Graph path_graph(int n) {
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Graph::build(n, es);
}

inline Graph complete_bipartite(int a, int b) {
    std::vector<Edge> es;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) es.emplace_back(i, a + j);
    return Graph::build(a + b, es);
}

inline Graph star(int leaves) {
    std::vector<Edge> es;
    for (int i = 1; i <= leaves; ++i) es.emplace_back(0, i);
    return Graph::build(leaves + 1, es);
}

inline Graph wheel(int rim) {
    std::vector<Edge> es;
    for (int i = 0; i < rim; ++i) {
        es.emplace_back(1 + i, 1 + (i + 1) % rim);
        es.emplace_back(0, 1 + i);
    }
    return Graph::build(rim + 1, es);
}

inline Graph cube() {  // Q3
    std::vector<Edge> es;
    for (int v = 0; v < 8; ++v)
        for (int b = 0; b < 3; ++b)
            if (v < (v ^ (1 << b))) es.emplace_back(v, v ^ (1 << b));
    return Graph::build(8, es);
}

inline Graph disjoint_c5_c5() {
    std::vector<Edge> es;
    for (int i = 0; i < 5; ++i) {
        es.emplace_back(i, (i + 1) % 5);
        es.emplace_back(5 + i, 5 + (i + 1) % 5);
    }
    return Graph::build(10, es);
}

inline Graph random_gnp(int n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng) < p) es.emplace_back(i, j);
    return Graph::build(n, es);
}

// >= 200 graphs with n <= 10: structured families plus seeded G(n,p).
inline std::vector<Named> small_fixtures() {
    using oddhole::gen_cycle;
    using oddhole::gen_k4_subdivision;
    using oddhole::gen_theta;
    using oddhole::petersen;
    std::vector<Named> out;
    for (int k = 3; k <= 10; ++k)
        out.push_back({"C" + std::to_string(k), gen_cycle(k)});
    for (int n = 2; n <= 10; ++n)
        out.push_back({"P" + std::to_string(n), path_graph(n)});
    for (int n = 4; n <= 6; ++n)
        out.push_back({"K" + std::to_string(n), complete(n)});
    out.push_back({"K23", complete_bipartite(2, 3)});
    out.push_back({"K33", complete_bipartite(3, 3)});
    out.push_back({"K45", complete_bipartite(4, 5)});
    out.push_back({"star6", star(6)});
    out.push_back({"wheel5", wheel(5)});
    out.push_back({"wheel6", wheel(6)});
    out.push_back({"cube", cube()});
    out.push_back({"petersen", petersen()});
    out.push_back({"theta233", gen_theta(2, 3, 3)});
    out.push_back({"theta234", gen_theta(2, 3, 4)});
    out.push_back({"theta135", gen_theta(1, 3, 5)});
    out.push_back({"theta224", gen_theta(2, 2, 4)});
    out.push_back({"k4sub112222", gen_k4_subdivision({1, 1, 2, 2, 2, 2}).graph});
    out.push_back({"k4sub111122", gen_k4_subdivision({1, 1, 1, 1, 2, 2}).graph});
    out.push_back({"c5c5", disjoint_c5_c5()});
    int idx = 0;
    for (int n = 4; n <= 10; ++n)
        for (double p : {0.2, 0.35, 0.5, 0.7})
            for (std::uint64_t s = 0; s < 7; ++s)
                out.push_back({"gnp" + std::to_string(idx++),
                               random_gnp(n, p, 1000 * n + s * 17 +
                                                    static_cast<int>(p * 100))});
    return out;
}

// Connected graphs with n <= 12 for the cut oracles.
inline std::vector<Named> cut_fixtures() {
    using oddhole::gen_cycle;
    using oddhole::gen_theta;
    using oddhole::is_connected;
    using oddhole::petersen;
    std::vector<Named> out;
    for (int k : {4, 5, 9, 12}) out.push_back({"C" + std::to_string(k), gen_cycle(k)});
    out.push_back({"P12", path_graph(12)});
    out.push_back({"K5", complete(5)});
    out.push_back({"K33", complete_bipartite(3, 3)});
    out.push_back({"petersen", petersen()});
    out.push_back({"theta345", gen_theta(3, 4, 5)});
    out.push_back({"cube", cube()});
    out.push_back({"star8", star(8)});
    out.push_back({"wheel7", wheel(7)});
    {
        // two triangles joined by one edge
        std::vector<Edge> es{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}};
        out.push_back({"bowtie-bridge", Graph::build(6, es)});
    }
    int idx = 0;
    for (int n = 5; n <= 12; ++n)
        for (double p : {0.3, 0.5})
            for (std::uint64_t s = 0; s < 4; ++s) {
                Graph g = random_gnp(n, p, 7000 + 100 * n + s * 13 +
                                               static_cast<int>(p * 10));
                if (is_connected(g))
                    out.push_back({"cgnp" + std::to_string(idx++), g});
            }
    return out;
}

// n <= 8 subset for the all-assignments chromatic oracle.
inline std::vector<Named> coloring_fixtures() {
    std::vector<Named> out;
    for (const auto& f : small_fixtures())
        if (f.graph.n() <= 8) out.push_back(f);
    return out;
}

}  // namespace fixtures
