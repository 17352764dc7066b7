#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "oddhole/vertex_set.hpp"

namespace oddhole {

using Edge = std::pair<int, int>;  // stored normalized u < v

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// Immutable simple undirected graph with dual adjacency representation:
// sorted neighbor lists for iteration order, per-vertex bitmaps for O(1)
// adjacency tests and the bitset kernels. All analyses in this library are
// pure functions over const Graph&, so graphs can be shared freely across
// worker threads.
class Graph {
  public:
    Graph() = default;

    static Graph build(int n, const std::vector<Edge>& edges) {
        if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
        Graph g;
        g.n_ = n;
        g.rows_.assign(n, VertexSet(n));
        bool dup = false;
        for (auto [u, v] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw std::invalid_argument("edge endpoint out of range: (" +
                                            std::to_string(u) + "," + std::to_string(v) + ")");
            if (u == v)
                throw std::invalid_argument("self-loop rejected at vertex " + std::to_string(u));
            if (g.rows_[u].test(v)) { dup = true; continue; }
            g.rows_[u].set(v);
            g.rows_[v].set(u);
        }
        g.adj_.resize(n);
        g.m_ = 0;
        for (int v = 0; v < n; ++v) {
            g.adj_[v] = g.rows_[v].to_vector();  // ascending by construction
            g.m_ += static_cast<int>(g.adj_[v].size());
        }
        g.m_ /= 2;
        g.collapsed_duplicates_ = dup;
        return g;
    }

    int n() const { return n_; }
    int m() const { return m_; }
    bool collapsed_duplicates() const { return collapsed_duplicates_; }

    bool has_edge(int u, int v) const { return rows_[u].test(v); }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    const VertexSet& row(int v) const { return rows_[v]; }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(m_);
        for (int u = 0; u < n_; ++u)
            for (int v : adj_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    VertexSet full_vertex_set() const {
        VertexSet s(n_);
        for (int v = 0; v < n_; ++v) s.set(v);
        return s;
    }

  private:
    int n_ = 0;
    int m_ = 0;
    bool collapsed_duplicates_ = false;
    std::vector<std::vector<int>> adj_;
    std::vector<VertexSet> rows_;
};

// Open vertex sequence v_0..v_k; length = k = number of edges.
struct Path {
    std::vector<int> v;

    int length() const { return static_cast<int>(v.size()) - 1; }
    int front() const { return v.front(); }
    int back() const { return v.back(); }
    std::vector<int> interior() const {
        if (v.size() <= 2) return {};
        return std::vector<int>(v.begin() + 1, v.end() - 1);
    }
};

// Cyclic vertex sequence. `reversed` flips which traversal direction counts
// as clockwise: arcs are always read off the effective clockwise order.
struct Cycle {
    std::vector<int> v;
    bool reversed = false;

    int length() const { return static_cast<int>(v.size()); }

    std::vector<int> clockwise() const {
        if (!reversed) return v;
        std::vector<int> out(v.rbegin(), v.rend());
        return out;
    }

    bool contains(int x) const {
        return std::find(v.begin(), v.end(), x) != v.end();
    }

    VertexSet vertex_set(int n) const { return VertexSet::of(n, v); }
};

inline bool is_path_in_graph(const Graph& g, const Path& p) {
    const auto& seq = p.v;
    if (seq.size() < 1) return false;
    std::vector<int> sorted = seq;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (int x : seq)
        if (x < 0 || x >= g.n()) return false;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
        if (!g.has_edge(seq[i], seq[i + 1])) return false;
    return true;
}

inline bool is_cycle_in_graph(const Graph& g, const Cycle& c) {
    const auto& seq = c.v;
    if (seq.size() < 3) return false;
    std::vector<int> sorted = seq;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (int x : seq)
        if (x < 0 || x >= g.n()) return false;
    for (std::size_t i = 0; i < seq.size(); ++i)
        if (!g.has_edge(seq[i], seq[(i + 1) % seq.size()])) return false;
    return true;
}

// True iff no edge of g joins nonconsecutive vertices of the path.
// Throws if the sequence is not a path of g at all: "not induced" and
// "not a path" are different answers.
inline bool is_induced_path(const Graph& g, const Path& p) {
    if (!is_path_in_graph(g, p))
        throw std::invalid_argument("sequence is not a path of the graph");
    const auto& seq = p.v;
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 2; j < seq.size(); ++j)
            if (g.has_edge(seq[i], seq[j])) return false;
    return true;
}

inline bool is_induced_cycle(const Graph& g, const Cycle& c) {
    if (!is_cycle_in_graph(g, c))
        throw std::invalid_argument("sequence is not a cycle of the graph");
    const auto& seq = c.v;
    const std::size_t k = seq.size();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 2; j < k; ++j) {
            if (i == 0 && j == k - 1) continue;  // cycle edge
            if (g.has_edge(seq[i], seq[j])) return false;
        }
    return true;
}

// Clockwise subpath of c from u to v (inclusive). arc(c,u,v) and arc(c,v,u)
// partition the edge set of c.
inline Path arc(const Cycle& c, int u, int v) {
    if (u == v) throw std::invalid_argument("arc endpoints must differ");
    std::vector<int> cw = c.clockwise();
    auto iu = std::find(cw.begin(), cw.end(), u);
    auto iv = std::find(cw.begin(), cw.end(), v);
    if (iu == cw.end() || iv == cw.end())
        throw std::invalid_argument("arc endpoint not on cycle");
    Path p;
    std::size_t i = iu - cw.begin();
    p.v.push_back(cw[i]);
    while (cw[i] != v) {
        i = (i + 1) % cw.size();
        p.v.push_back(cw[i]);
    }
    return p;
}

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_host;  // new index -> host vertex
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    std::vector<int> verts = s.to_vector();
    for (int v : verts)
        if (v >= g.n()) throw std::invalid_argument("induced_subgraph: vertex out of range");
    std::vector<int> to_sub(g.n(), -1);
    for (std::size_t i = 0; i < verts.size(); ++i) to_sub[verts[i]] = static_cast<int>(i);
    std::vector<Edge> es;
    for (int u : verts)
        for (int w : g.neighbors(u))
            if (u < w && s.test(w)) es.emplace_back(to_sub[u], to_sub[w]);
    return InducedSubgraph{Graph::build(static_cast<int>(verts.size()), es), std::move(verts)};
}

// Edge subgraph: an edge set of the host plus the vertices those edges touch.
// The symmetric difference used throughout the cycle arithmetic is edge-XOR;
// the vertex set is re-derived from the surviving edges.
struct EdgeSubgraph {
    std::vector<Edge> edges;  // kept sorted, normalized u < v

    static EdgeSubgraph of(std::vector<Edge> es) {
        for (auto& e : es) e = make_edge(e.first, e.second);
        std::sort(es.begin(), es.end());
        es.erase(std::unique(es.begin(), es.end()), es.end());
        return EdgeSubgraph{std::move(es)};
    }

    static EdgeSubgraph of_cycle(const Cycle& c) {
        std::vector<Edge> es;
        for (std::size_t i = 0; i < c.v.size(); ++i)
            es.push_back(make_edge(c.v[i], c.v[(i + 1) % c.v.size()]));
        return of(std::move(es));
    }

    static EdgeSubgraph of_path(const Path& p) {
        std::vector<Edge> es;
        for (std::size_t i = 0; i + 1 < p.v.size(); ++i)
            es.push_back(make_edge(p.v[i], p.v[i + 1]));
        return of(std::move(es));
    }

    std::vector<int> vertices() const {
        std::vector<int> vs;
        for (auto [u, v] : edges) { vs.push_back(u); vs.push_back(v); }
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        return vs;
    }

    bool empty() const { return edges.empty(); }

    bool validate_in(const Graph& g) const {
        for (auto [u, v] : edges)
            if (u < 0 || v >= g.n() || !g.has_edge(u, v)) return false;
        return true;
    }

    // If the edge set forms a single cycle, return it as a Cycle.
    bool as_cycle(Cycle& out) const {
        if (edges.empty()) return false;
        std::vector<int> vs = vertices();
        if (vs.size() != edges.size()) return false;  // cycle has |V| == |E|
        // degree-2 everywhere, then walk it
        std::vector<std::pair<int, int>> nbr;  // per vertex: up to two neighbors
        std::vector<int> deg(vs.size(), 0);
        auto idx = [&](int v) {
            return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
        };
        nbr.assign(vs.size(), {-1, -1});
        for (auto [u, v] : edges) {
            int iu = idx(u), iv = idx(v);
            if (deg[iu] >= 2 || deg[iv] >= 2) return false;
            (deg[iu]++ ? nbr[iu].second : nbr[iu].first) = iv;
            (deg[iv]++ ? nbr[iv].second : nbr[iv].first) = iu;
        }
        for (int d : deg)
            if (d != 2) return false;
        std::vector<int> walk{0};
        int prev = -1, cur = 0;
        while (true) {
            int nxt = (nbr[cur].first != prev) ? nbr[cur].first : nbr[cur].second;
            if (nxt == 0) break;
            walk.push_back(nxt);
            prev = cur;
            cur = nxt;
        }
        if (walk.size() != vs.size()) return false;  // more than one cycle
        out.v.clear();
        for (int i : walk) out.v.push_back(vs[i]);
        out.reversed = false;
        return true;
    }
};

inline EdgeSubgraph symmetric_difference(const EdgeSubgraph& a, const EdgeSubgraph& b) {
    std::vector<Edge> out;
    std::set_symmetric_difference(a.edges.begin(), a.edges.end(),
                                  b.edges.begin(), b.edges.end(),
                                  std::back_inserter(out));
    return EdgeSubgraph{std::move(out)};
}

// Connected components after deleting `removed_vertices` and `removed_edges`.
// component_of[v] == -1 for deleted vertices.
struct Partition {
    std::vector<int> component_of;
    int count = 0;

    std::vector<std::vector<int>> groups() const {
        std::vector<std::vector<int>> gs(count);
        for (std::size_t v = 0; v < component_of.size(); ++v)
            if (component_of[v] >= 0) gs[component_of[v]].push_back(static_cast<int>(v));
        return gs;
    }
};

inline Partition components(const Graph& g,
                            const VertexSet* removed_vertices = nullptr,
                            const std::vector<Edge>* removed_edges = nullptr) {
    Partition p;
    p.component_of.assign(g.n(), -1);
    auto cut_edge = [&](int u, int v) {
        if (!removed_edges) return false;
        Edge e = make_edge(u, v);
        return std::find(removed_edges->begin(), removed_edges->end(), e) !=
               removed_edges->end();
    };
    std::vector<int> stack;
    for (int s = 0; s < g.n(); ++s) {
        if (p.component_of[s] >= 0) continue;
        if (removed_vertices && removed_vertices->test(s)) continue;
        int id = p.count++;
        p.component_of[s] = id;
        stack.assign(1, s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : g.neighbors(u)) {
                if (p.component_of[v] >= 0) continue;
                if (removed_vertices && removed_vertices->test(v)) continue;
                if (cut_edge(u, v)) continue;
                p.component_of[v] = id;
                stack.push_back(v);
            }
        }
    }
    return p;
}

inline bool is_connected(const Graph& g) {
    if (g.n() == 0) return true;
    return components(g).count == 1;
}

// BFS distances from s, -1 where unreachable. `blocked` vertices are skipped.
inline std::vector<int> bfs_distances(const Graph& g, int s,
                                      const VertexSet* blocked = nullptr) {
    std::vector<int> dist(g.n(), -1);
    if (blocked && blocked->test(s)) return dist;
    std::vector<int> q{s};
    dist[s] = 0;
    for (std::size_t i = 0; i < q.size(); ++i) {
        int u = q[i];
        for (int v : g.neighbors(u)) {
            if (dist[v] >= 0) continue;
            if (blocked && blocked->test(v)) continue;
            dist[v] = dist[u] + 1;
            q.push_back(v);
        }
    }
    return dist;
}

}  // namespace oddhole
