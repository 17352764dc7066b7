#pragma once

// Brute-force oracles used to pin down expected values independently of the
// library's search paths. Deliberately naive: subsets, all assignments, all
// candidate removals, permutation backtracking.

#include <algorithm>
#include <set>
#include <vector>

#include "oddhole/graph.hpp"

namespace oracle {

using oddhole::Edge;
using oddhole::Graph;

// Every induced cycle of g as a sorted vertex set, found by testing all 2^n
// vertex subsets: G[S] must be connected and 2-regular. Usable to n ~ 20.
inline std::set<std::vector<int>> induced_cycle_sets(const Graph& g) {
    std::set<std::vector<int>> out;
    const int n = g.n();
    for (unsigned mask = 7; mask < (1u << n); ++mask) {
        int size = __builtin_popcount(mask);
        if (size < 3) continue;
        std::vector<int> verts;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) verts.push_back(v);
        bool two_regular = true;
        for (int v : verts) {
            int deg = 0;
            for (int w : verts)
                if (w != v && g.has_edge(v, w)) ++deg;
            if (deg != 2) { two_regular = false; break; }
        }
        if (!two_regular) continue;
        // connectivity of G[S]
        std::vector<int> stack{verts[0]};
        std::set<int> seen{verts[0]};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : verts)
                if (w != v && g.has_edge(v, w) && seen.insert(w).second)
                    stack.push_back(w);
        }
        if (static_cast<int>(seen.size()) == size) out.insert(verts);
    }
    return out;
}

inline int component_count_after(const Graph& g, const std::vector<int>& removed_vertices,
                                 const std::vector<Edge>& removed_edges) {
    const int n = g.n();
    std::vector<bool> gone(n, false);
    for (int v : removed_vertices) gone[v] = true;
    auto edge_removed = [&](int u, int v) {
        for (auto [a, b] : removed_edges)
            if ((a == u && b == v) || (a == v && b == u)) return true;
        return false;
    };
    std::vector<int> comp(n, -1);
    int count = 0;
    for (int s = 0; s < n; ++s) {
        if (gone[s] || comp[s] >= 0) continue;
        comp[s] = count;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v = 0; v < n; ++v)
                if (!gone[v] && comp[v] < 0 && g.has_edge(u, v) && !edge_removed(u, v)) {
                    comp[v] = count;
                    stack.push_back(v);
                }
        }
        ++count;
    }
    return count;
}

inline std::set<std::pair<Edge, Edge>> two_edge_cut_pairs(const Graph& g) {
    std::set<std::pair<Edge, Edge>> out;
    auto es = g.edges();
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j)
            if (component_count_after(g, {}, {es[i], es[j]}) > 1)
                out.insert({es[i], es[j]});
    return out;
}

inline std::set<std::vector<int>> k2_cut_pairs(const Graph& g) {
    std::set<std::vector<int>> out;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (g.has_edge(u, v) && component_count_after(g, {u, v}, {}) > 1)
                out.insert({u, v});
    return out;
}

inline std::set<std::vector<int>> p3_cut_triples(const Graph& g) {
    std::set<std::vector<int>> out;
    for (int x = 0; x < g.n(); ++x)
        for (int y = 0; y < g.n(); ++y)
            for (int z = x + 1; z < g.n(); ++z) {
                if (y == x || y == z) continue;
                if (!g.has_edge(x, y) || !g.has_edge(y, z) || g.has_edge(x, z)) continue;
                if (component_count_after(g, {x, y, z}, {}) > 1) {
                    std::vector<int> t{x, y, z};
                    std::sort(t.begin(), t.end());
                    out.insert(t);
                }
            }
    return out;
}

// Least k such that some of the k^n assignments is proper; tries k = 1..n.
inline int chromatic_number_all_assignments(const Graph& g) {
    const int n = g.n();
    if (n == 0) return 0;
    auto es = g.edges();
    for (int k = 1; k <= n; ++k) {
        std::vector<int> a(n, 0);
        for (;;) {
            bool proper = true;
            for (auto [u, v] : es)
                if (a[u] == a[v]) { proper = false; break; }
            if (proper) return k;
            int i = 0;
            while (i < n) {
                if (++a[i] < k) break;
                a[i] = 0;
                ++i;
            }
            if (i == n) break;  // odometer wrapped: k colors insufficient
        }
    }
    return n;
}

// Permutation backtracking isomorphism test with degree pruning.
inline bool isomorphic(const Graph& a, const Graph& b) {
    if (a.n() != b.n() || a.m() != b.m()) return false;
    const int n = a.n();
    std::vector<int> da(n), db(n);
    for (int v = 0; v < n; ++v) { da[v] = a.degree(v); db[v] = b.degree(v); }
    {
        auto sa = da, sb = db;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    std::vector<int> map(n, -1);
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == n) return true;
        for (int w = 0; w < n; ++w) {
            if (used[w] || da[v] != db[w]) continue;
            bool ok = true;
            for (int u = 0; u < v; ++u)
                if (a.has_edge(u, v) != b.has_edge(map[u], w)) { ok = false; break; }
            if (!ok) continue;
            map[v] = w;
            used[w] = true;
            if (self(self, v + 1)) return true;
            used[w] = false;
            map[v] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

// Lexicographically least adjacency bitstring over every vertex permutation.
// Exact canonical form, usable only for small n (n <= 7 in the tests).
inline std::vector<bool> lexmin_adjacency_string(const Graph& g) {
    const int n = g.n();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::vector<bool> best;
    do {
        std::vector<bool> bits;
        bits.reserve(n * (n - 1) / 2);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                bits.push_back(g.has_edge(perm[i], perm[j]));
        if (best.empty() || bits < best) best = bits;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace oracle
