#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "oddhole/coloring.hpp"
#include "oddhole/graph.hpp"

namespace oddhole {

// Witness for one of the small forbidden structures. Candidate sets have size
// at most 3, so detection is exhaustive over candidates rather than flow
// based, and every witness is re-checkable by direct component counting.
struct CutWitness {
    enum class Kind { Degree2, TwoEdgeCut, K2Cut, P3Cut };
    Kind kind;
    std::vector<int> vertices;  // the degree-2 vertex / cut pair / cut triple
    std::vector<Edge> edges;    // the pair for TwoEdgeCut
    int component_count = 0;    // after removal (0 for Degree2)
};

inline std::vector<int> degree_two_vertices(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) == 2) out.push_back(v);
    return out;
}

namespace detail {

inline void require_connected(const Graph& g, const char* op) {
    if (!is_connected(g))
        throw std::invalid_argument(std::string(op) + " requires a connected graph");
}

}  // namespace detail

inline std::vector<CutWitness> two_edge_cuts(const Graph& g) {
    detail::require_connected(g, "two_edge_cuts");
    std::vector<CutWitness> out;
    auto es = g.edges();
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            std::vector<Edge> removed{es[i], es[j]};
            Partition p = components(g, nullptr, &removed);
            if (p.count > 1)
                out.push_back(CutWitness{CutWitness::Kind::TwoEdgeCut, {}, removed, p.count});
        }
    return out;
}

inline std::vector<CutWitness> k2_cuts(const Graph& g) {
    detail::require_connected(g, "k2_cuts");
    std::vector<CutWitness> out;
    for (int u = 0; u < g.n(); ++u)
        for (int v : g.neighbors(u)) {
            if (v <= u) continue;
            VertexSet rm = VertexSet::of(g.n(), {u, v});
            Partition p = components(g, &rm);
            if (p.count > 1)
                out.push_back(CutWitness{CutWitness::Kind::K2Cut, {u, v}, {}, p.count});
        }
    return out;
}

// Cut triples inducing exactly a two-edge path x-y-z (middle adjacent to both
// ends, ends nonadjacent).
inline std::vector<CutWitness> p3_cuts(const Graph& g) {
    detail::require_connected(g, "p3_cuts");
    std::vector<CutWitness> out;
    for (int y = 0; y < g.n(); ++y) {
        const auto& nb = g.neighbors(y);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                int x = nb[i], z = nb[j];
                if (g.has_edge(x, z)) continue;
                VertexSet rm = VertexSet::of(g.n(), {x, y, z});
                Partition p = components(g, &rm);
                if (p.count > 1)
                    out.push_back(CutWitness{CutWitness::Kind::P3Cut, {x, y, z}, {}, p.count});
            }
    }
    return out;
}

// k-vertex-criticality: chi(G) = k and chi(G - v) < k for every v. Decided
// with the exact coloring solver; evidence carries the (k-1)-colorings of the
// deletions, or the vertex where the definition failed.
struct CriticalityVerdict {
    enum class Status { Critical, NotCritical, Unknown };
    Status status = Status::Unknown;
    std::string reason;
    std::optional<int> failing_vertex;          // deletion that stayed at chi >= k
    std::vector<Coloring> deletion_colorings;   // (k-1)-colorings of each G - v
    BudgetReport budget;

    bool critical() const { return status == Status::Critical; }
};

inline CriticalityVerdict is_k_vertex_critical(const Graph& g, int k,
                                               SearchBudget& budget) {
    if (k < 1) throw std::invalid_argument("criticality needs k >= 1");
    CriticalityVerdict v;
    auto at_k = k_colorable(g, k, budget);
    if (at_k.status == ColoringOutcome::Status::Unknown) {
        v.reason = "k-coloring search budget exhausted";
        v.budget = snapshot(budget);
        return v;
    }
    if (!at_k.found()) {
        v.status = CriticalityVerdict::Status::NotCritical;
        v.reason = "chi > k: graph is not k-colorable";
        v.budget = snapshot(budget);
        return v;
    }
    auto below = k_colorable(g, k - 1, budget);
    if (below.status == ColoringOutcome::Status::Unknown) {
        v.reason = "(k-1)-coloring search budget exhausted";
        v.budget = snapshot(budget);
        return v;
    }
    if (below.found()) {
        v.status = CriticalityVerdict::Status::NotCritical;
        v.reason = "chi < k: graph is (k-1)-colorable";
        v.budget = snapshot(budget);
        return v;
    }
    for (int del = 0; del < g.n(); ++del) {
        VertexSet keep = g.full_vertex_set();
        keep.reset(del);
        auto sub = induced_subgraph(g, keep);
        auto out = k_colorable(sub.graph, k - 1, budget);
        if (out.status == ColoringOutcome::Status::Unknown) {
            v.reason = "deletion coloring budget exhausted at vertex " + std::to_string(del);
            v.budget = snapshot(budget);
            return v;
        }
        if (!out.found()) {
            v.status = CriticalityVerdict::Status::NotCritical;
            v.failing_vertex = del;
            v.reason = "G - " + std::to_string(del) + " still needs k colors";
            v.budget = snapshot(budget);
            return v;
        }
        v.deletion_colorings.push_back(*out.coloring);
    }
    v.status = CriticalityVerdict::Status::Critical;
    v.reason = "chi = k and every vertex deletion is (k-1)-colorable";
    v.budget = snapshot(budget);
    return v;
}

}  // namespace oddhole
