#pragma once

#include <array>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "oddhole/canonical.hpp"
#include "oddhole/graph.hpp"
#include "oddhole/holes.hpp"
#include "oddhole/k4.hpp"

namespace oddhole {

inline Graph gen_cycle(int k) {
    if (k < 3) throw std::invalid_argument("cycle length must be >= 3");
    std::vector<Edge> es;
    for (int i = 0; i < k; ++i) es.emplace_back(i, (i + 1) % k);
    return Graph::build(k, es);
}

// Theta graph: hubs 0 and 1 joined by three internally disjoint paths of
// lengths a <= b <= c. At most one length may be 1, otherwise the parallel
// hub edges would collapse.
inline Graph gen_theta(int a, int b, int c) {
    if (a < 1 || !(a <= b && b <= c))
        throw std::invalid_argument("theta lengths must satisfy 1 <= a <= b <= c");
    if (b == 1) throw std::invalid_argument("two unit branches form a parallel edge");
    std::vector<Edge> es;
    int next = 2;
    for (int len : {a, b, c}) {
        int prev = 0;
        for (int i = 1; i < len; ++i) {
            es.emplace_back(prev, next);
            prev = next++;
        }
        es.emplace_back(prev, 1);
    }
    return Graph::build(next, es);
}

// Petersen graph as GP(5,2): outer cycle 0..4, spokes i-(i+5), inner edges
// (i+5)-((i+2)%5+5).
inline Graph petersen() {
    std::vector<Edge> es;
    for (int i = 0; i < 5; ++i) {
        es.emplace_back(i, (i + 1) % 5);
        es.emplace_back(i, i + 5);
        es.emplace_back(i + 5, (i + 2) % 5 + 5);
    }
    return Graph::build(10, es);
}

// Arris lengths in slot order (|P1|,|P2|,|Q1|,|Q2|,|L1|,|L2|).
using K4Spec = std::array<int, 6>;

struct GeneratedK4 {
    Graph graph;
    K4Subdivision labels;
};

// Build the K4-subdivision with the given arris lengths: branch vertices
// u1..u4 = 0..3, interior vertices numbered arris by arris.
inline GeneratedK4 gen_k4_subdivision(const K4Spec& spec) {
    for (int len : spec)
        if (len < 1) throw std::invalid_argument("arris lengths must be >= 1");
    const std::array<std::pair<int, int>, 6> ends{
        {{0, 1}, {2, 3}, {1, 2}, {0, 3}, {0, 2}, {1, 3}}};
    std::vector<Edge> es;
    std::array<Path, 6> paths;
    int next = 4;
    for (int s = 0; s < 6; ++s) {
        auto [from, to] = ends[s];
        Path p;
        p.v.push_back(from);
        for (int i = 1; i < spec[s]; ++i) p.v.push_back(next++);
        p.v.push_back(to);
        for (std::size_t i = 0; i + 1 < p.v.size(); ++i)
            es.emplace_back(p.v[i], p.v[i + 1]);
        paths[s] = std::move(p);
    }
    GeneratedK4 out{Graph::build(next, es), {}};
    out.labels.u = {0, 1, 2, 3};
    out.labels.p1 = paths[0];
    out.labels.p2 = paths[1];
    out.labels.q1 = paths[2];
    out.labels.q2 = paths[3];
    out.labels.l1 = paths[4];
    out.labels.l2 = paths[5];
    return out;
}

struct RandomGraphResult {
    Graph graph;
    bool complete = false;  // reached the requested edge count
    int restarts = 0;
};

// Randomized edge addition with shortest-cycle rejection: a candidate edge
// (u,v) is admissible iff dist(u,v) >= g_min - 1 in the current graph, so
// every cycle ever closed has length >= g_min. Dead ends trigger a restart;
// the whole procedure is a deterministic function of the seed.
inline RandomGraphResult random_girth_graph(int n, int m, int g_min,
                                            std::uint64_t seed,
                                            std::uint64_t max_draws = 2'000'000) {
    if (n < 1 || m < 0 || g_min < 3)
        throw std::invalid_argument("random_girth_graph: bad parameters");
    std::mt19937_64 rng(seed);
    std::vector<Edge> best;
    std::uint64_t draws = 0;
    int restarts = 0;
    const int stall_limit = 50 * n;
    while (draws < max_draws) {
        std::vector<std::vector<int>> adj(n);
        std::vector<Edge> edges;
        auto dist_at_least = [&](int u, int v, int bound) {
            // true iff dist(u,v) >= bound - 1: BFS from u, giving up once
            // everything within depth bound-2 is explored
            std::vector<int> dist(n, -1), q{u};
            dist[u] = 0;
            for (std::size_t i = 0; i < q.size(); ++i) {
                int x = q[i];
                if (dist[x] >= bound - 2) break;
                for (int y : adj[x]) {
                    if (dist[y] >= 0) continue;
                    dist[y] = dist[x] + 1;
                    if (y == v) return false;
                    q.push_back(y);
                }
            }
            return true;
        };
        int stall = 0;
        while (static_cast<int>(edges.size()) < m && draws < max_draws) {
            ++draws;
            int u = static_cast<int>(rng() % n);
            int v = static_cast<int>(rng() % n);
            bool dup = false;
            for (int w : adj[u]) dup |= (w == v);
            if (u == v || dup || !dist_at_least(u, v, g_min)) {
                if (++stall > stall_limit) break;
                continue;
            }
            adj[u].push_back(v);
            adj[v].push_back(u);
            edges.emplace_back(u, v);
            stall = 0;
        }
        if (static_cast<int>(edges.size()) == m)
            return RandomGraphResult{Graph::build(n, edges), true, restarts};
        if (edges.size() > best.size()) best = edges;
        ++restarts;
    }
    return RandomGraphResult{Graph::build(n, best), false, restarts};
}

// Every connected graph on at most n_max vertices with girth exactly g, one
// representative per isomorphism class (canonical-key dedup). Grows level
// sets of all girth >= g graphs by vertex addition: a new vertex may attach
// to any set of pairwise-distance >= g-2 vertices.
template <typename Visit>
inline void for_each_girth_graph(int n_max, int g, Visit visit) {
    if (g < 5 || n_max > 12 || n_max < 1)
        throw std::invalid_argument("exhaustive enumeration guarded to g >= 5, n_max <= 12");
    std::vector<std::vector<Edge>> level{{}};  // edge lists; level starts at n=1
    for (int n = 1; n <= n_max; ++n) {
        if (n >= 3) {
            for (const auto& es : level) {
                Graph gr = Graph::build(n, es);
                if (!is_connected(gr)) continue;
                auto gi = girth(gr);
                if (gi && *gi == g)
                    if (!visit(gr)) return;
            }
        }
        if (n == n_max) break;
        std::vector<std::vector<Edge>> next_level;
        std::unordered_set<std::string> seen;
        for (const auto& es : level) {
            Graph gr = Graph::build(n, es);
            // far[v] = vertices u > v with dist(u,v) >= g-2
            std::vector<VertexSet> far(n, VertexSet(n));
            for (int v = 0; v < n; ++v) {
                auto dist = bfs_distances(gr, v);
                for (int u = v + 1; u < n; ++u)
                    if (dist[u] < 0 || dist[u] >= g - 2) far[v].set(u);
            }
            // enumerate attachment sets: pairwise-far subsets (incl. empty)
            std::vector<int> chosen;
            auto emit_child = [&]() {
                std::vector<Edge> child = es;
                for (int v : chosen) child.emplace_back(v, n);
                Graph cg = Graph::build(n + 1, child);
                std::string key = canonical_key(cg);
                if (seen.insert(std::move(key)).second)
                    next_level.push_back(std::move(child));
            };
            auto rec = [&](auto&& self, int start, VertexSet allowed) -> void {
                emit_child();
                for (int v = start; v < n; ++v) {
                    if (!chosen.empty() && !allowed.test(v)) continue;
                    chosen.push_back(v);
                    VertexSet next_allowed =
                        chosen.size() == 1 ? far[v] : (allowed & far[v]);
                    self(self, v + 1, next_allowed);
                    chosen.pop_back();
                }
            };
            rec(rec, 0, VertexSet(n));
        }
        level = std::move(next_level);
    }
}

inline std::vector<Graph> exhaustive_girth_graphs(int n_max, int g) {
    std::vector<Graph> out;
    for_each_girth_graph(n_max, g, [&](const Graph& gr) {
        out.push_back(gr);
        return true;
    });
    return out;
}

}  // namespace oddhole
