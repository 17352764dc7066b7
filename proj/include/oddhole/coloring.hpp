#pragma once

#include <optional>
#include <vector>

#include "oddhole/budget.hpp"
#include "oddhole/graph.hpp"

namespace oddhole {

// Proper coloring with colors 1..k.
struct Coloring {
    int k = 0;
    std::vector<int> color;  // per vertex
};

inline bool verify_coloring(const Graph& g, const Coloring& c) {
    if (static_cast<int>(c.color.size()) != g.n()) return false;
    for (int v = 0; v < g.n(); ++v)
        if (c.color[v] < 1 || c.color[v] > c.k) return false;
    for (int u = 0; u < g.n(); ++u)
        for (int v : g.neighbors(u))
            if (u < v && c.color[u] == c.color[v]) return false;
    return true;
}

struct ColoringOutcome {
    enum class Status { Found, Exhausted, Unknown };
    Status status = Status::Unknown;
    std::optional<Coloring> coloring;
    BudgetReport budget;

    bool found() const { return status == Status::Found; }
    bool exhausted() const { return status == Status::Exhausted; }
};

namespace detail {

// DSATUR-ordered backtracking. Ties break toward higher degree then lower
// index, and at most one fresh color may be introduced per step, so the
// search is deterministic and does not revisit color-permuted assignments.
struct ColorSearch {
    const Graph& g;
    int k;
    SearchBudget& budget;
    std::vector<int> color;          // 0 = uncolored
    std::vector<VertexSet> nbr_colors;  // per vertex: colors used by neighbors
    int colored = 0;

    ColorSearch(const Graph& g_, int k_, SearchBudget& b)
        : g(g_), k(k_), budget(b), color(g_.n(), 0),
          nbr_colors(g_.n(), VertexSet(k_ + 1)) {}

    int pick() const {
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < g.n(); ++v) {
            if (color[v]) continue;
            int sat = nbr_colors[v].count();
            int deg = g.degree(v);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best;
    }

    bool solve(int max_used) {
        if (colored == g.n()) return true;
        if (!budget.tick()) return false;
        int v = pick();
        int cap = std::min(k, max_used + 1);  // one new color at most
        for (int c = 1; c <= cap; ++c) {
            if (nbr_colors[v].test(c)) continue;
            color[v] = c;
            ++colored;
            std::vector<int> bumped;
            for (int w : g.neighbors(v))
                if (!color[w] && !nbr_colors[w].test(c)) {
                    nbr_colors[w].set(c);
                    bumped.push_back(w);
                }
            if (solve(std::max(max_used, c))) return true;
            for (int w : bumped) nbr_colors[w].reset(c);
            color[v] = 0;
            --colored;
            if (budget.exhausted) return false;
        }
        return false;
    }
};

}  // namespace detail

// Exact k-colorability. Negative answers are only reported when the search
// space was exhausted; a budget blowout is Unknown. Every returned coloring
// has passed verify_coloring.
inline ColoringOutcome k_colorable(const Graph& g, int k, SearchBudget& budget) {
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    ColoringOutcome out;
    if (g.n() == 0) {
        out.status = ColoringOutcome::Status::Found;
        out.coloring = Coloring{k, {}};
        out.budget = snapshot(budget);
        return out;
    }
    if (k == 0) {
        out.status = ColoringOutcome::Status::Exhausted;
        out.budget = snapshot(budget);
        return out;
    }
    detail::ColorSearch search(g, k, budget);
    bool ok = search.solve(0);
    out.budget = snapshot(budget);
    if (ok) {
        Coloring c{k, search.color};
        if (!verify_coloring(g, c))
            throw std::logic_error("solver produced an improper coloring");
        out.status = ColoringOutcome::Status::Found;
        out.coloring = std::move(c);
    } else if (budget.exhausted) {
        out.status = ColoringOutcome::Status::Unknown;
    } else {
        out.status = ColoringOutcome::Status::Exhausted;
    }
    return out;
}

struct ChromaticResult {
    enum class Status { Exact, Unknown };
    Status status = Status::Unknown;
    int chromatic_number = -1;
    std::optional<Coloring> coloring;
    BudgetReport budget;
};

// Least k admitting a proper coloring, certified on both sides: a verified
// coloring at k and an exhausted search at k-1.
inline ChromaticResult chromatic_number(const Graph& g, SearchBudget& budget) {
    ChromaticResult r;
    if (g.n() == 0) {
        r.status = ChromaticResult::Status::Exact;
        r.chromatic_number = 0;
        r.coloring = Coloring{0, {}};
        r.budget = snapshot(budget);
        return r;
    }
    bool below_exhausted = true;  // k = 0 is trivially exhausted for n >= 1
    for (int k = 1; k <= g.n(); ++k) {
        auto out = k_colorable(g, k, budget);
        r.budget = out.budget;
        if (out.found()) {
            if (!below_exhausted) return r;  // k-1 side unknown: no certificate
            r.status = ChromaticResult::Status::Exact;
            r.chromatic_number = k;
            r.coloring = std::move(out.coloring);
            return r;
        }
        below_exhausted = out.exhausted();
        if (out.status == ColoringOutcome::Status::Unknown && budget.exhausted)
            return r;
    }
    return r;
}

}  // namespace oddhole
