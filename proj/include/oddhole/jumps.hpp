#pragma once

#include <cassert>
#include <optional>
#include <string>
#include <vector>

#include "oddhole/budget.hpp"
#include "oddhole/graph.hpp"
#include "oddhole/holes.hpp"
#include "oddhole/status.hpp"

namespace oddhole {

// A jump over a hole C: an induced (s,t)-path between nonadjacent hole
// vertices whose interior avoids C. q1 is the clockwise (s,t) arc of C and
// q2 the (t,s) arc. Classification looks at which arc interiors see the
// jump's interior:
//   Short                 neither arc interior has a neighbor in P*
//   Local                 exactly one arc interior does
//   LocalAcrossOneVertex  local, and that arc interior is a single vertex
//   General               both arc interiors do
// For short jumps the reported across-arc is the one closing an odd cycle
// with P (the jump-hole side).
struct JumpClassification {
    enum class Kind { Short, Local, LocalAcrossOneVertex, General };
    Kind kind = Kind::General;
    int across = -1;                  // 0 = across q1*, 1 = across q2*
    std::optional<int> across_vertex;  // the single vertex, for LAOV
};

struct Jump {
    Cycle hole;
    Path path;  // s = path.front(), t = path.back()
    Path q1, q2;
    JumpClassification cls;

    int s() const { return path.front(); }
    int t() const { return path.back(); }
    const Path& across_arc() const { return cls.across == 0 ? q1 : q2; }
    const Path& other_arc() const { return cls.across == 0 ? q2 : q1; }
    bool short_or_one_vertex() const {
        return cls.kind == JumpClassification::Kind::Short ||
               cls.kind == JumpClassification::Kind::LocalAcrossOneVertex;
    }
};

namespace detail {

// Why (s,t,P) fails to be a jump over C, or nullopt if it is one.
inline std::optional<std::string> jump_violation(const Graph& g, const Cycle& c,
                                                 const Path& p) {
    if (p.v.size() < 2) return "path too short";
    if (!is_path_in_graph(g, p)) return "not a path of the graph";
    int s = p.front(), t = p.back();
    if (!c.contains(s) || !c.contains(t)) return "ends not on the hole";
    if (s == t) return "ends coincide";
    if (g.has_edge(s, t)) return "ends adjacent";
    VertexSet cset = c.vertex_set(g.n());
    for (int w : p.interior())
        if (cset.test(w)) return "interior meets the hole";
    if (!is_induced_path(g, p)) return "path not induced";
    return std::nullopt;
}

}  // namespace detail

inline JumpClassification classify_jump(const Graph& g, const Cycle& c,
                                        const Path& p) {
    if (auto why = detail::jump_violation(g, c, p))
        throw std::invalid_argument("not a jump: " + *why);
    int s = p.front(), t = p.back();
    Path q1 = arc(c, s, t), q2 = arc(c, t, s);
    // nonadjacent ends mean both arcs have nonempty interior
    assert(q1.length() >= 2 && q2.length() >= 2);
    VertexSet pstar_nbrs(g.n());
    for (int w : p.interior()) pstar_nbrs |= g.row(w);
    auto touched = [&](const Path& q) {
        for (int w : q.interior())
            if (pstar_nbrs.test(w)) return true;
        return false;
    };
    bool t1 = touched(q1), t2 = touched(q2);
    JumpClassification cls;
    if (!t1 && !t2) {
        cls.kind = JumpClassification::Kind::Short;
        cls.across = (p.length() + q1.length()) % 2 == 1 ? 0 : 1;
    } else if (t1 != t2) {
        const Path& q = t1 ? q1 : q2;
        cls.across = t1 ? 0 : 1;
        if (static_cast<int>(q.interior().size()) == 1) {
            cls.kind = JumpClassification::Kind::LocalAcrossOneVertex;
            cls.across_vertex = q.interior().front();
        } else {
            cls.kind = JumpClassification::Kind::Local;
        }
    } else {
        cls.kind = JumpClassification::Kind::General;
    }
    return cls;
}

// Visit every jump over the odd hole c, classified. Deterministic order:
// end pairs ascending, then depth-first path order. Visitor returns false to
// stop. Returns false on early stop (including budget exhaustion).
template <typename Visit>
inline bool for_each_jump(const Graph& g, const Cycle& c, SearchBudget& budget,
                          Visit visit) {
    if (!is_induced_cycle(g, c) || c.length() % 2 == 0)
        throw std::invalid_argument("jump search needs an induced odd cycle");
    VertexSet allowed = c.vertex_set(g.n()).complement();
    std::vector<int> verts = c.v;
    std::sort(verts.begin(), verts.end());
    for (std::size_t i = 0; i < verts.size(); ++i) {
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            int s = verts[i], t = verts[j];
            if (g.has_edge(s, t)) continue;
            bool go = detail::for_each_chordless_path(
                g, s, t, allowed, g.n(), budget, [&](Path p) {
                    Jump j;
                    j.hole = c;
                    j.cls = classify_jump(g, c, p);
                    j.q1 = arc(c, s, t);
                    j.q2 = arc(c, t, s);
                    j.path = std::move(p);
                    return visit(std::move(j));
                });
            if (!go) return false;
        }
    }
    return true;
}

struct JumpEnumeration {
    std::vector<Jump> jumps;
    bool exhausted = false;
};

// A short jump together with the odd hole it closes with its across-arc.
struct JumpHoleWitness {
    Jump jump;
    Cycle hole;  // jump path glued to the across arc
};

// The jump hole of a short jump, or nullopt if the jump is not short or the
// glued cycle fails to be an induced odd cycle.
inline std::optional<JumpHoleWitness> jump_hole(const Graph& g, const Jump& j) {
    if (j.cls.kind != JumpClassification::Kind::Short) return std::nullopt;
    Cycle cy;
    cy.v = j.path.v;  // s .. t
    const std::vector<int>& qv = j.across_arc().v;
    if (qv.front() == j.t()) {
        for (std::size_t i = 1; i + 1 < qv.size(); ++i) cy.v.push_back(qv[i]);
    } else {
        for (std::size_t i = qv.size() - 2; i >= 1; --i) cy.v.push_back(qv[i]);
    }
    if (cy.length() % 2 == 0 || !is_induced_cycle(g, cy)) return std::nullopt;
    return JumpHoleWitness{j, std::move(cy)};
}

inline JumpEnumeration enumerate_jumps(const Graph& g, const Cycle& c,
                                       SearchBudget& budget) {
    JumpEnumeration out;
    for_each_jump(g, c, budget, [&](Jump j) {
        out.jumps.push_back(std::move(j));
        return true;
    });
    out.exhausted = budget.exhausted;
    return out;
}

// True iff C together with P forms an induced theta subgraph: equivalently,
// P is a short jump over C. A path whose ends are adjacent on C is not
// accepted; short jumps and chordal paths differ exactly on that case, and
// this predicate takes the nonadjacent-hubs side.
inline bool is_chordal_path(const Graph& g, const Cycle& c, const Path& p) {
    if (!is_induced_cycle(g, c))
        throw std::invalid_argument("chordal-path test needs an induced cycle");
    if (detail::jump_violation(g, c, p)) return false;
    VertexSet pstar_nbrs(g.n());
    for (int w : p.interior()) pstar_nbrs |= g.row(w);
    Path q1 = arc(c, p.front(), p.back()), q2 = arc(c, p.back(), p.front());
    for (int w : q1.interior())
        if (pstar_nbrs.test(w)) return false;
    for (int w : q2.interior())
        if (pstar_nbrs.test(w)) return false;
    return true;
}

// Per-instance lemma report used by the jump-side checkers.
struct InstanceReport {
    CheckStatus status = CheckStatus::Skipped;
    std::string detail;
};

// Chordal-path length law: with P a chordal path of the odd hole C, P1 the
// arc between P's ends of the same parity as |P| and P2 the other arc,
//     |P1| = 1   or   l >= |P2| < |P1| = |P| >= l+1.
inline InstanceReport check_lemma_2_3(const Graph& g, int l, const Cycle& c,
                                      const Path& p) {
    InstanceReport r;
    if (c.length() % 2 == 0) {
        r.detail = "hole is even";
        return r;
    }
    if (!is_chordal_path(g, c, p)) {
        r.detail = "P is not a chordal path of C";
        return r;
    }
    Path a1 = arc(c, p.front(), p.back()), a2 = arc(c, p.back(), p.front());
    int lp = p.length();
    int l1 = a1.length() % 2 == lp % 2 ? a1.length() : a2.length();
    int l2 = a1.length() % 2 == lp % 2 ? a2.length() : a1.length();
    bool ok = (l1 == 1) || (l2 <= l && l2 < l1 && l1 == lp && lp >= l + 1);
    r.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
    r.detail = "|P|=" + std::to_string(lp) + " |P1|=" + std::to_string(l1) +
               " |P2|=" + std::to_string(l2) + " l=" + std::to_string(l);
    return r;
}

// Jump parity law: a short or local jump P across Q1* satisfies
// |P| == |Q2| (mod 2), P together with Q2 is an even hole, and P with Q1 an
// odd cycle.
inline InstanceReport check_jump_parity(const Graph& g, const Cycle& c,
                                        const Jump& j) {
    InstanceReport r;
    if (j.cls.kind == JumpClassification::Kind::General) {
        r.detail = "jump is neither short nor local";
        return r;
    }
    const Path& across = j.across_arc();
    const Path& other = j.other_arc();
    bool parity = (j.path.length() % 2) == (other.length() % 2);
    // compose P with an arc: both run between s and t, glue t-side to t-side
    auto compose = [&](const Path& q) {
        Cycle cy;
        cy.v = j.path.v;  // s .. t
        const std::vector<int>& qv = q.v;
        if (qv.front() == j.t()) {
            for (std::size_t i = 1; i + 1 < qv.size(); ++i) cy.v.push_back(qv[i]);
        } else {
            for (std::size_t i = qv.size() - 2; i >= 1; --i) cy.v.push_back(qv[i]);
        }
        return cy;
    };
    Cycle with_other = compose(other);
    Cycle with_across = compose(across);
    bool even_hole = is_cycle_in_graph(g, with_other) &&
                     with_other.length() % 2 == 0 &&
                     is_induced_cycle(g, with_other);
    bool odd_cycle = is_cycle_in_graph(g, with_across) &&
                     with_across.length() % 2 == 1;
    r.status = (parity && even_hole && odd_cycle) ? CheckStatus::Pass : CheckStatus::Fail;
    r.detail = "|P|=" + std::to_string(j.path.length()) +
               " |Q1|=" + std::to_string(across.length()) +
               " |Q2|=" + std::to_string(other.length());
    return r;
}

// Ends of two jumps interleave strictly around the hole.
inline bool are_crossing(const Cycle& c, const Jump& a, const Jump& b) {
    int a1 = a.s(), a2 = a.t(), b1 = b.s(), b2 = b.t();
    if (a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2) return false;
    std::vector<int> cw = c.clockwise();
    auto pos = [&](int v) {
        return static_cast<int>(std::find(cw.begin(), cw.end(), v) - cw.begin());
    };
    // walk clockwise from a1: b's ends must straddle a2
    int pa1 = pos(a1), pa2 = pos(a2), pb1 = pos(b1), pb2 = pos(b2);
    int n = c.length();
    auto offset = [&](int p) { return (p - pa1 + n) % n; };
    int oa2 = offset(pa2), ob1 = offset(pb1), ob2 = offset(pb2);
    return (ob1 < oa2) != (ob2 < oa2);
}

struct JumpWitnessResult {
    enum class Outcome { Witness, NoJumpsExist, NoWitness, Unknown };
    Outcome outcome = Outcome::Unknown;
    std::optional<Jump> witness;
};

// Search for a short jump or a local jump across one vertex over C. Exact
// outcomes when the jump enumeration completes; Unknown on budget blowout.
inline JumpWitnessResult find_short_or_one_vertex_jump(const Graph& g,
                                                       const Cycle& c,
                                                       SearchBudget& budget) {
    JumpWitnessResult r;
    bool saw_jump = false;
    bool complete = for_each_jump(g, c, budget, [&](Jump j) {
        saw_jump = true;
        if (j.short_or_one_vertex()) {
            r.witness = std::move(j);
            return false;
        }
        return true;
    });
    if (r.witness) {
        r.outcome = JumpWitnessResult::Outcome::Witness;
    } else if (!complete || budget.exhausted) {
        r.outcome = JumpWitnessResult::Outcome::Unknown;
    } else if (saw_jump) {
        r.outcome = JumpWitnessResult::Outcome::NoWitness;
    } else {
        r.outcome = JumpWitnessResult::Outcome::NoJumpsExist;
    }
    return r;
}

}  // namespace oddhole
