#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "oddhole/graph.hpp"

namespace oddhole {
namespace detail {

// Canonical labeling for small graphs (n <= 16): iterated neighbourhood
// refinement plus individualization on the first non-singleton cell, taking
// the lexicographically least adjacency string over all branches. Within a
// cell, mutually twin vertices (identical neighbourhoods) are interchangeable
// by an automorphism, so only one representative per twin class is branched.
class SmallCanon {
  public:
    explicit SmallCanon(const Graph& g) : n_(g.n()) {
        if (n_ > 16) throw std::invalid_argument("canonical form limited to n <= 16");
        rows_.assign(n_, 0);
        for (int u = 0; u < n_; ++u)
            for (int v : g.neighbors(u)) rows_[u] |= (1u << v);
    }

    std::string key() {
        best_.clear();
        std::vector<int> color(n_, 0);
        refine(color);
        search(color);
        return best_;
    }

  private:
    void refine(std::vector<int>& color) const {
        for (;;) {
            // signature: (color, sorted multiset of neighbour colors)
            std::vector<std::pair<std::vector<int>, int>> sig(n_);
            for (int v = 0; v < n_; ++v) {
                std::vector<int> s{color[v]};
                for (int w = 0; w < n_; ++w)
                    if (rows_[v] & (1u << w)) s.push_back(color[w]);
                std::sort(s.begin() + 1, s.end());
                sig[v] = {std::move(s), v};
            }
            auto order = sig;
            std::sort(order.begin(), order.end());
            std::vector<int> next(n_);
            int c = 0;
            for (int i = 0; i < n_; ++i) {
                if (i > 0 && order[i].first != order[i - 1].first) ++c;
                next[order[i].second] = c;
            }
            if (next == color) return;
            color = std::move(next);
        }
    }

    void search(const std::vector<int>& color) {
        // find first non-singleton cell (in color order)
        int target_color = -1;
        {
            std::vector<int> count(n_, 0);
            for (int v = 0; v < n_; ++v) ++count[color[v]];
            for (int c = 0; c < n_; ++c)
                if (count[c] >= 2) { target_color = c; break; }
        }
        if (target_color < 0) {
            emit(color);
            return;
        }
        std::vector<int> cell;
        for (int v = 0; v < n_; ++v)
            if (color[v] == target_color) cell.push_back(v);
        std::vector<int> reps;
        for (int v : cell) {
            bool twin = false;
            for (int r : reps) {
                std::uint32_t rv = rows_[v] & ~(1u << r);
                std::uint32_t rr = rows_[r] & ~(1u << v);
                if (rv == rr) { twin = true; break; }
            }
            if (!twin) reps.push_back(v);
        }
        for (int v : reps) {
            std::vector<int> child = color;
            for (int w = 0; w < n_; ++w)
                if (child[w] >= target_color) ++child[w];
            child[v] = target_color;  // split v off in front of its old cell
            refine(child);
            search(child);
        }
    }

    void emit(const std::vector<int>& color) {
        // discrete coloring: order vertices by color, serialize the upper
        // triangle row-wise into bytes
        std::vector<int> order(n_);
        for (int v = 0; v < n_; ++v) order[color[v]] = v;
        std::string key;
        key.push_back(static_cast<char>(n_));
        int acc = 0, fill = 0;
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j) {
                acc = (acc << 1) | ((rows_[order[i]] >> order[j]) & 1);
                if (++fill == 8) {
                    key.push_back(static_cast<char>(acc));
                    acc = 0;
                    fill = 0;
                }
            }
        if (fill) key.push_back(static_cast<char>(acc << (8 - fill)));
        if (best_.empty() || key < best_) best_ = std::move(key);
    }

    int n_;
    std::vector<std::uint32_t> rows_;
    std::string best_;
};

}  // namespace detail

// Isomorphism-invariant key for small graphs; equal keys mean isomorphic.
inline std::string canonical_key(const Graph& g) {
    return detail::SmallCanon(g).key();
}

}  // namespace oddhole
