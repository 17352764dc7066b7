#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <optional>
#include <string>
#include <vector>

#include "oddhole/budget.hpp"
#include "oddhole/graph.hpp"
#include "oddhole/status.hpp"

namespace oddhole {

inline Path reversed(const Path& p) {
    Path r;
    r.v.assign(p.v.rbegin(), p.v.rend());
    return r;
}

enum class K4Class { OddRegular, OddIrregular, Balanced12, Other };

inline const char* to_string(K4Class c) {
    switch (c) {
        case K4Class::OddRegular: return "odd-regular";
        case K4Class::OddIrregular: return "odd-irregular";
        case K4Class::Balanced12: return "balanced(1,2)";
        case K4Class::Other: return "other";
    }
    return "?";
}

// Labeled K4-subdivision: branch vertices u1..u4 and six arrises
//   P1=(u1,u2)  P2=(u3,u4)  Q1=(u2,u3)  Q2=(u1,u4)  L1=(u1,u3)  L2=(u2,u4),
// stored oriented from the first named endpoint. The face cycles are
//   C1=P1+Q1+L1  C2=P1+Q2+L2  C3=P2+Q1+L2  C4=P2+Q2+L1,
// with C4 equal to the edge symmetric difference C1^C2^C3.
struct K4Subdivision {
    std::array<int, 4> u{};
    Path p1, p2, q1, q2, l1, l2;

    std::array<const Path*, 6> arrises() const {
        return {&p1, &p2, &q1, &q2, &l1, &l2};
    }

    std::array<int, 6> arris_lengths() const {
        return {p1.length(), p2.length(), q1.length(),
                q2.length(), l1.length(), l2.length()};
    }

    std::array<int, 4> face_lengths() const {
        return {p1.length() + q1.length() + l1.length(),
                p1.length() + q2.length() + l2.length(),
                p2.length() + q1.length() + l2.length(),
                p2.length() + q2.length() + l1.length()};
    }

    // u1 -P1-> u2 -Q1-> u3 -L1rev-> u1, and so on around each face.
    std::array<Cycle, 4> faces() const {
        auto join3 = [](const Path& a, const Path& b, const Path& c) {
            Cycle cy;
            cy.v = a.v;
            cy.v.insert(cy.v.end(), b.v.begin() + 1, b.v.end());
            cy.v.insert(cy.v.end(), c.v.begin() + 1, c.v.end() - 1);
            return cy;
        };
        return {join3(p1, q1, reversed(l1)), join3(p1, l2, reversed(q2)),
                join3(p2, reversed(l2), q1), join3(p2, reversed(q2), l1)};
    }

    VertexSet vertex_set(int n) const {
        VertexSet s(n);
        for (const Path* a : arrises())
            for (int v : a->v) s.set(v);
        return s;
    }

    EdgeSubgraph edge_subgraph() const {
        std::vector<Edge> es;
        for (const Path* a : arrises())
            for (std::size_t i = 0; i + 1 < a->v.size(); ++i)
                es.push_back(make_edge(a->v[i], a->v[i + 1]));
        return EdgeSubgraph::of(std::move(es));
    }

    // Arris between two branch vertices, oriented from `from`.
    const Path* arris_between(int from, int to) const {
        for (const Path* a : arrises())
            if ((a->front() == from && a->back() == to) ||
                (a->front() == to && a->back() == from))
                return a;
        return nullptr;
    }

    // Relabel branch vertices; new_u must be a permutation of u.
    K4Subdivision relabel(const std::array<int, 4>& new_u) const {
        auto oriented = [&](int from, int to) {
            const Path* a = arris_between(from, to);
            assert(a != nullptr);
            return a->front() == from ? *a : reversed(*a);
        };
        K4Subdivision h;
        h.u = new_u;
        h.p1 = oriented(new_u[0], new_u[1]);
        h.p2 = oriented(new_u[2], new_u[3]);
        h.q1 = oriented(new_u[1], new_u[2]);
        h.q2 = oriented(new_u[0], new_u[3]);
        h.l1 = oriented(new_u[0], new_u[2]);
        h.l2 = oriented(new_u[1], new_u[3]);
        return h;
    }

    // Structural sanity: arrises are paths of g, internally disjoint, and
    // each branch vertex has degree exactly 3 inside the subdivision.
    bool validate(const Graph& g) const {
        for (const Path* a : arrises()) {
            if (a->length() < 1 || !is_path_in_graph(g, *a)) return false;
            for (int w : a->interior())
                for (int b : u)
                    if (w == b) return false;
        }
        VertexSet seen(g.n());
        for (const Path* a : arrises())
            for (int w : a->interior()) {
                if (seen.test(w)) return false;
                seen.set(w);
            }
        std::array<int, 4> su = u;
        std::sort(su.begin(), su.end());
        if (std::adjacent_find(su.begin(), su.end()) != su.end()) return false;
        for (int b : u) {
            int deg = 0;
            for (const Path* a : arrises())
                deg += (a->front() == b) + (a->back() == b);
            if (deg != 3) return false;
        }
        return true;
    }
};

namespace detail {

inline const std::array<std::array<int, 4>, 24>& s4_permutations() {
    static const std::array<std::array<int, 4>, 24> perms = [] {
        std::array<std::array<int, 4>, 24> out{};
        std::array<int, 4> p{0, 1, 2, 3};
        int i = 0;
        do {
            out[i++] = p;
        } while (std::next_permutation(p.begin(), p.end()));
        return out;
    }();
    return perms;
}

}  // namespace detail

// Class of a decomposition. Odd means all four faces odd; regular means all
// six arrises equal on top of that. Balanced (1,2) is searched over all 24
// labelings: some labeling with C1,C2 odd, C3,C4 even, |Q1|=1 and |L2|>=2.
inline K4Class classify(const K4Subdivision& h) {
    auto faces = h.face_lengths();
    int odd = 0;
    for (int f : faces) odd += f % 2;
    if (odd == 4) {
        auto lens = h.arris_lengths();
        bool regular = std::all_of(lens.begin(), lens.end(),
                                   [&](int x) { return x == lens[0]; });
        return regular ? K4Class::OddRegular : K4Class::OddIrregular;
    }
    if (odd == 2) {
        for (const auto& perm : detail::s4_permutations()) {
            K4Subdivision r = h.relabel({h.u[perm[0]], h.u[perm[1]],
                                         h.u[perm[2]], h.u[perm[3]]});
            auto f = r.face_lengths();
            if (f[0] % 2 == 1 && f[1] % 2 == 1 && f[2] % 2 == 0 &&
                f[3] % 2 == 0 && r.q1.length() == 1 && r.l2.length() >= 2)
                return K4Class::Balanced12;
        }
    }
    return K4Class::Other;
}

inline bool is_odd_k4(const K4Subdivision& h) {
    K4Class c = classify(h);
    return c == K4Class::OddRegular || c == K4Class::OddIrregular;
}

// Normalize the labeling of an odd K4-subdivision so that {P1,P2} is a
// longest vertex-disjoint arris pair (largest |P1|+|P2|, then largest |P1|,
// ties broken by the lexicographically smallest branch tuple).
inline K4Subdivision normalize_longest_pair(const K4Subdivision& h) {
    if (!is_odd_k4(h))
        throw std::invalid_argument("difference is defined for odd K4-subdivisions");
    std::optional<K4Subdivision> best;
    auto better = [](const K4Subdivision& a, const K4Subdivision& b) {
        int sa = a.p1.length() + a.p2.length(), sb = b.p1.length() + b.p2.length();
        if (sa != sb) return sa > sb;
        if (a.p1.length() != b.p1.length()) return a.p1.length() > b.p1.length();
        return a.u < b.u;
    };
    for (const auto& perm : detail::s4_permutations()) {
        K4Subdivision r = h.relabel({h.u[perm[0]], h.u[perm[1]],
                                     h.u[perm[2]], h.u[perm[3]]});
        if (!best || better(r, *best)) best = std::move(r);
    }
    return *best;
}

// |P1| - min(|Q1|, |L1|) under the longest-pair normalization; nonnegative.
inline int difference(const K4Subdivision& h) {
    K4Subdivision n = normalize_longest_pair(h);
    return n.p1.length() - std::min(n.q1.length(), n.l1.length());
}

// Stream all K4-subdivisions of g with every arris length <= max_arris_len,
// one representative per labeling orbit (branch vertices in ascending order).
// Returns false when stopped early by the visitor or the budget.
template <typename Visit>
inline bool for_each_k4_subdivision(const Graph& g, int max_arris_len,
                                    SearchBudget& budget, Visit visit) {
    if (max_arris_len < 1)
        throw std::invalid_argument("arris length cap must be >= 1");
    const int n = g.n();
    std::vector<int> branch;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) >= 3) branch.push_back(v);
    if (branch.size() < 4) return true;

    struct Cand {
        Path path;
        VertexSet interior;
    };

    // all simple (x,y)-paths of length <= cap whose interior avoids `forbid`
    auto paths_between = [&](int x, int y, const VertexSet& forbid,
                             std::vector<Cand>& out) {
        out.clear();
        std::vector<int> path{x};
        VertexSet on_path(n);
        on_path.set(x);
        auto dfs = [&](auto&& self, int tip) -> bool {
            for (int w : g.neighbors(tip)) {
                if (!budget.tick()) return false;
                if (w == y) {
                    Cand c;
                    c.path.v = path;
                    c.path.v.push_back(y);
                    c.interior = on_path;
                    c.interior.reset(x);
                    out.push_back(std::move(c));
                    continue;
                }
                if (on_path.test(w) || forbid.test(w)) continue;
                if (static_cast<int>(path.size()) >= max_arris_len) continue;
                path.push_back(w);
                on_path.set(w);
                bool go = self(self, w);
                on_path.reset(w);
                path.pop_back();
                if (!go) return false;
            }
            return true;
        };
        return dfs(dfs, x);
    };

    const std::size_t nb = branch.size();
    for (std::size_t ia = 0; ia < nb; ++ia)
        for (std::size_t ib = ia + 1; ib < nb; ++ib)
            for (std::size_t ic = ib + 1; ic < nb; ++ic)
                for (std::size_t id = ic + 1; id < nb; ++id) {
                    int a = branch[ia], b = branch[ib], c = branch[ic], d = branch[id];
                    VertexSet forbid = VertexSet::of(n, {a, b, c, d});
                    // slot order (u1,u2)=(a,b), (u3,u4)=(c,d):
                    // P1=ab P2=cd Q1=bc Q2=ad L1=ac L2=bd
                    const std::array<std::pair<int, int>, 6> pairs{
                        {{a, b}, {c, d}, {b, c}, {a, d}, {a, c}, {b, d}}};
                    std::array<std::vector<Cand>, 6> cand;
                    bool feasible = true;
                    for (int s = 0; s < 6 && feasible; ++s) {
                        if (!paths_between(pairs[s].first, pairs[s].second,
                                           forbid, cand[s]))
                            return false;
                        feasible = !cand[s].empty();
                    }
                    if (!feasible) continue;
                    std::array<const Cand*, 6> pick{};
                    VertexSet used(n);
                    auto assemble = [&](auto&& self, int slot) -> bool {
                        if (slot == 6) {
                            K4Subdivision h;
                            h.u = {a, b, c, d};
                            h.p1 = pick[0]->path;
                            h.p2 = pick[1]->path;
                            h.q1 = pick[2]->path;
                            h.q2 = pick[3]->path;
                            h.l1 = pick[4]->path;
                            h.l2 = pick[5]->path;
                            return visit(std::move(h));
                        }
                        for (const Cand& cd : cand[slot]) {
                            if (!budget.tick()) return false;
                            if (cd.interior.intersects(used)) continue;
                            pick[slot] = &cd;
                            used |= cd.interior;
                            bool go = self(self, slot + 1);
                            used ^= cd.interior;
                            if (!go) return false;
                        }
                        return true;
                    };
                    if (!assemble(assemble, 0)) return false;
                }
    return true;
}

struct K4Enumeration {
    std::vector<K4Subdivision> found;
    bool exhausted = false;
};

inline K4Enumeration find_k4_subdivisions(const Graph& g, int max_arris_len,
                                          SearchBudget& budget) {
    K4Enumeration out;
    for_each_k4_subdivision(g, max_arris_len, budget, [&](K4Subdivision h) {
        out.found.push_back(std::move(h));
        return true;
    });
    out.exhausted = budget.exhausted;
    return out;
}

// Three-part structure report for an odd K4-subdivision inside a G_l member:
// (1) vertex-disjoint arris pairs have equal length <= l, (2) the subdivision
// is induced, (3) for l >= 3 no outside vertex has two neighbours in it.
struct Lemma25Report {
    CheckStatus equal_pairs = CheckStatus::Skipped;
    CheckStatus induced = CheckStatus::Skipped;
    CheckStatus no_two_neighbours = CheckStatus::Skipped;
    std::string detail;
};

inline Lemma25Report verify_lemma_2_5(const Graph& g, int l,
                                      const K4Subdivision& h) {
    Lemma25Report r;
    if (!is_odd_k4(h)) {
        r.detail = "not an odd K4-subdivision";
        return r;
    }
    bool pairs_ok = h.p1.length() == h.p2.length() && h.p1.length() <= l &&
                    h.q1.length() == h.q2.length() && h.q1.length() <= l &&
                    h.l1.length() == h.l2.length() && h.l1.length() <= l;
    r.equal_pairs = pairs_ok ? CheckStatus::Pass : CheckStatus::Fail;

    VertexSet hv = h.vertex_set(g.n());
    EdgeSubgraph he = h.edge_subgraph();
    std::vector<int> verts = hv.to_vector();
    bool induced_ok = true;
    for (std::size_t i = 0; i < verts.size() && induced_ok; ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            if (!g.has_edge(verts[i], verts[j])) continue;
            Edge e = make_edge(verts[i], verts[j]);
            if (!std::binary_search(he.edges.begin(), he.edges.end(), e)) {
                induced_ok = false;
                r.detail = "extra edge (" + std::to_string(e.first) + "," +
                           std::to_string(e.second) + ")";
                break;
            }
        }
    r.induced = induced_ok ? CheckStatus::Pass : CheckStatus::Fail;

    if (l >= 3) {
        bool ok = true;
        for (int v = 0; v < g.n() && ok; ++v) {
            if (hv.test(v)) continue;
            if (g.row(v).intersection_count(hv) >= 2) {
                ok = false;
                r.detail = "vertex " + std::to_string(v) + " has two neighbours in H";
            }
        }
        r.no_two_neighbours = ok ? CheckStatus::Pass : CheckStatus::Fail;
    }
    return r;
}

// Induced path whose first vertex is the unique path vertex with a neighbour
// in h1 and whose last is the unique one with a neighbour in h2.
struct DirectConnection {
    Path path;
};

struct DirectConnectionResult {
    enum class Outcome { Found, None, Unknown };
    Outcome outcome = Outcome::None;
    std::optional<DirectConnection> connection;
};

// Shortest direct connection via multi-source BFS outside h1 and h2; a
// shortest qualifying path is automatically induced and minimal.
inline DirectConnectionResult find_direct_connection(const Graph& g,
                                                     const VertexSet& h1,
                                                     const VertexSet& h2,
                                                     SearchBudget& budget) {
    if (h1.intersects(h2))
        throw std::invalid_argument("direct connection targets must be disjoint");
    DirectConnectionResult r;
    const int n = g.n();
    std::vector<int> dist(n, -1), parent(n, -1);
    std::vector<int> queue;
    for (int v = 0; v < n; ++v) {
        if (h1.test(v) || h2.test(v)) continue;
        if (g.row(v).intersects(h1)) {
            if (g.row(v).intersects(h2)) {  // one-vertex connection
                r.outcome = DirectConnectionResult::Outcome::Found;
                r.connection = DirectConnection{Path{{v}}};
                return r;
            }
            dist[v] = 0;
            queue.push_back(v);
        }
    }
    for (std::size_t i = 0; i < queue.size(); ++i) {
        int u = queue[i];
        if (!budget.tick()) {
            r.outcome = DirectConnectionResult::Outcome::Unknown;
            return r;
        }
        for (int w : g.neighbors(u)) {
            if (h1.test(w) || h2.test(w) || dist[w] >= 0) continue;
            if (g.row(w).intersects(h1)) continue;  // only sources may touch h1
            dist[w] = dist[u] + 1;
            parent[w] = u;
            if (g.row(w).intersects(h2)) {
                Path p;
                for (int x = w; x != -1; x = parent[x]) p.v.push_back(x);
                std::reverse(p.v.begin(), p.v.end());
                r.outcome = DirectConnectionResult::Outcome::Found;
                r.connection = DirectConnection{std::move(p)};
                return r;
            }
            queue.push_back(w);
        }
    }
    return r;
}

}  // namespace oddhole
