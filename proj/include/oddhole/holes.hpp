#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oddhole/budget.hpp"
#include "oddhole/graph.hpp"

namespace oddhole {

// Exact girth by one BFS per root: every shortest cycle is seen from each of
// its vertices without shortcuts, so the minimum over roots is exact.
// nullopt for forests.
inline std::optional<int> girth(const Graph& g) {
    int best = -1;
    for (int s = 0; s < g.n(); ++s) {
        std::vector<int> dist(g.n(), -1), parent(g.n(), -1);
        std::vector<int> q{s};
        dist[s] = 0;
        for (std::size_t i = 0; i < q.size(); ++i) {
            int u = q[i];
            for (int v : g.neighbors(u)) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    q.push_back(v);
                } else if (v != parent[u] && dist[v] >= dist[u]) {
                    int len = dist[u] + dist[v] + 1;
                    if (best < 0 || len < best) best = len;
                }
            }
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

// A shortest cycle, as a Cycle (shortest cycles are always induced).
inline std::optional<Cycle> shortest_cycle(const Graph& g) {
    int best = -1;
    Cycle out;
    for (int s = 0; s < g.n(); ++s) {
        std::vector<int> dist(g.n(), -1), parent(g.n(), -1);
        std::vector<int> q{s};
        dist[s] = 0;
        for (std::size_t i = 0; i < q.size(); ++i) {
            int u = q[i];
            for (int v : g.neighbors(u)) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    q.push_back(v);
                } else if (v != parent[u] && dist[v] >= dist[u]) {
                    int len = dist[u] + dist[v] + 1;
                    if (best >= 0 && len >= best) continue;
                    // Walk both branches back to the root. For the minimum
                    // over all roots the two branches only share s, so this
                    // traces a genuine cycle of length `len`.
                    std::vector<int> left, right;
                    for (int x = u; x != -1; x = parent[x]) left.push_back(x);
                    for (int x = v; x != -1; x = parent[x]) right.push_back(x);
                    std::vector<int> cyc(left.rbegin(), left.rend());  // s..u
                    cyc.insert(cyc.end(), right.begin(), right.end() - 1);  // v..(below s)
                    std::vector<int> sorted = cyc;
                    std::sort(sorted.begin(), sorted.end());
                    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                        continue;  // branches met off-root; a better root will see it
                    best = len;
                    out.v = std::move(cyc);
                }
            }
        }
    }
    if (best < 0) return std::nullopt;
    return out;
}

enum class Parity { Any, Odd, Even };

struct CycleEnumeration {
    std::vector<Cycle> cycles;
    bool exhausted = false;  // budget ran out; the list may be incomplete
};

namespace detail {

// Depth-first extension of chordless paths. A candidate extension w is
// admissible iff its only neighbor on the current path is the tip (edges to
// the start vertex are allowed exactly when they close the cycle). Each
// induced cycle is produced once: start at its minimum vertex and walk
// toward the smaller of that vertex's two cycle neighbors.
template <typename Visit>
bool induced_cycle_dfs(const Graph& g, int s, std::vector<int>& path,
                       VertexSet& on_path, int min_len, int max_len,
                       Parity parity, SearchBudget& budget, Visit& visit) {
    int tip = path.back();
    for (int w : g.neighbors(tip)) {
        if (w <= s || on_path.test(w)) continue;
        if (!budget.tick()) return false;
        // domination test: no neighbor among path vertices except tip / s
        VertexSet mid = g.row(w) & on_path;
        mid.reset(tip);
        bool closes = g.row(w).test(s);
        if (closes) mid.reset(s);
        if (!mid.empty()) continue;
        if (closes) {
            int len = static_cast<int>(path.size()) + 1;
            if (len >= 3 && len >= min_len && len <= max_len &&
                path[1] < w &&
                (parity == Parity::Any || (parity == Parity::Odd) == (len % 2 == 1))) {
                Cycle c;
                c.v = path;
                c.v.push_back(w);
                if (!visit(std::move(c))) return false;
            }
            continue;  // an edge to s blocks any longer extension through w
        }
        if (static_cast<int>(path.size()) + 1 >= max_len) continue;
        path.push_back(w);
        on_path.set(w);
        bool go = induced_cycle_dfs(g, s, path, on_path, min_len, max_len,
                                    parity, budget, visit);
        on_path.reset(w);
        path.pop_back();
        if (!go) return false;
    }
    return true;
}

}  // namespace detail

// Visit every induced cycle of g with length in [min_len, max_len] matching
// the parity filter, each exactly once up to rotation/reflection. The visitor
// returns false to stop early. Returns false iff the walk terminated early
// (visitor stop or budget exhaustion — check budget.exhausted to tell apart).
template <typename Visit>
inline bool for_each_induced_cycle(const Graph& g, int min_len, int max_len,
                                   Parity parity, SearchBudget& budget,
                                   Visit visit) {
    if (min_len < 3) throw std::invalid_argument("cycle min_len must be >= 3");
    if (max_len > g.n()) max_len = g.n();
    std::vector<int> path;
    VertexSet on_path(g.n());
    for (int s = 0; s < g.n(); ++s) {
        for (int a : g.neighbors(s)) {
            if (a <= s) continue;
            if (!budget.tick()) return false;
            path.assign({s, a});
            on_path.clear();
            on_path.set(s);
            on_path.set(a);
            if (!detail::induced_cycle_dfs(g, s, path, on_path, min_len,
                                           max_len, parity, budget, visit))
                return false;
        }
    }
    return true;
}

inline CycleEnumeration enumerate_induced_cycles(const Graph& g, int min_len,
                                                 int max_len, Parity parity,
                                                 SearchBudget& budget) {
    CycleEnumeration out;
    for_each_induced_cycle(g, min_len, max_len, parity, budget,
                           [&](Cycle c) {
                               out.cycles.push_back(std::move(c));
                               return true;
                           });
    out.exhausted = budget.exhausted;
    return out;
}

namespace detail {

// Chordless (s,t)-path kernel shared by the jump search and the lemma
// machinery: enumerates induced (s,t)-paths whose interior stays inside
// `allowed`. Forbidding a region is done by masking it out of `allowed`.
// Requires s != t and s,t nonadjacent (an adjacent pair admits no induced
// path other than the edge, which callers never want here).
template <typename Visit>
bool chordless_path_dfs(const Graph& g, int t, std::vector<int>& path,
                        VertexSet& on_path, const VertexSet& allowed,
                        int max_len, SearchBudget& budget, Visit& visit) {
    int tip = path.back();
    for (int w : g.neighbors(tip)) {
        if (on_path.test(w)) continue;
        if (w != t && !allowed.test(w)) continue;
        if (!budget.tick()) return false;
        VertexSet mid = g.row(w) & on_path;
        mid.reset(tip);
        if (!mid.empty()) continue;
        if (w == t) {
            Path p;
            p.v = path;
            p.v.push_back(t);
            if (!visit(std::move(p))) return false;
            continue;
        }
        if (static_cast<int>(path.size()) >= max_len) continue;
        path.push_back(w);
        on_path.set(w);
        bool go = chordless_path_dfs(g, t, path, on_path, allowed, max_len,
                                     budget, visit);
        on_path.reset(w);
        path.pop_back();
        if (!go) return false;
    }
    return true;
}

template <typename Visit>
bool for_each_chordless_path(const Graph& g, int s, int t,
                             const VertexSet& allowed_interior, int max_len,
                             SearchBudget& budget, Visit visit) {
    std::vector<int> path{s};
    VertexSet on_path(g.n());
    on_path.set(s);
    return chordless_path_dfs(g, t, path, on_path, allowed_interior, max_len,
                              budget, visit);
}

}  // namespace detail

// Three-valued membership verdict for the girth/odd-hole family G_l:
// girth exactly 2l+1 and no induced odd cycle of length >= 2l+3.
struct MembershipVerdict {
    enum class Status { InGl, OutGl, Unknown };
    Status status = Status::Unknown;
    int l = 0;
    std::optional<Cycle> certificate;  // violating cycle when OutGl
    std::string reason;
    BudgetReport budget;

    bool in() const { return status == Status::InGl; }
};

inline MembershipVerdict is_in_Gl(const Graph& g, int l, SearchBudget& budget) {
    if (l < 2) throw std::invalid_argument("G_l is defined for l >= 2");
    MembershipVerdict v;
    v.l = l;
    const int target = 2 * l + 1;
    auto gir = girth(g);
    if (!gir) {
        v.status = MembershipVerdict::Status::OutGl;
        v.reason = "acyclic: girth undefined, required exactly " + std::to_string(target);
        v.budget = snapshot(budget);
        return v;
    }
    if (*gir != target) {
        v.status = MembershipVerdict::Status::OutGl;
        v.reason = "girth " + std::to_string(*gir) + ", required exactly " +
                   std::to_string(target);
        auto c = shortest_cycle(g);
        // a short cycle certifies directly; a too-long *odd* girth cycle is
        // itself an odd hole of length >= 2l+3
        if (c && (*gir < target || *gir % 2 == 1)) v.certificate = *c;
        v.budget = snapshot(budget);
        return v;
    }
    std::optional<Cycle> bad;
    for_each_induced_cycle(g, target + 2, g.n(), Parity::Odd, budget,
                           [&](Cycle c) {
                               bad = std::move(c);
                               return false;
                           });
    v.budget = snapshot(budget);
    if (bad) {
        v.status = MembershipVerdict::Status::OutGl;
        v.certificate = std::move(*bad);
        v.reason = "odd hole of length " + std::to_string(v.certificate->length());
    } else if (budget.exhausted) {
        v.status = MembershipVerdict::Status::Unknown;
        v.reason = "odd-hole enumeration budget exhausted";
    } else {
        v.status = MembershipVerdict::Status::InGl;
        v.reason = "girth " + std::to_string(target) + ", no odd hole of length >= " +
                   std::to_string(target + 2);
    }
    return v;
}

}  // namespace oddhole
