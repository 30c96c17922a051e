#pragma once

#include "incol/degeneracy.hpp"
#include "incol/errors.hpp"
#include "incol/graph.hpp"
#include "incol/model.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

namespace incol {

/// Vertices in removal order, each with its neighbors among the vertices
/// removed after it. Replaying the removals empties the graph.
struct PeelStack {
    struct Entry {
        int vertex;
        std::vector<int> neighbors;  // neighbors alive at removal time
    };
    std::vector<Entry> entries;
};

namespace detail {

/// Smallest color >= 1 not in `used`, capped by num_colors.
inline int smallest_free(const std::set<int>& used, int num_colors) {
    int c = 1;
    for (int u : used) {
        if (u > c) break;
        if (u == c) ++c;
    }
    return c <= num_colors ? c : 0;
}

/// Weak-palette container for one vertex: its current weak colors,
/// completed with the smallest color ids outside its strong set until the
/// container holds `size` colors.
inline std::set<int> palette_container(const Graph& g, const IncidenceColoring& c, int v,
                                       int size, const std::set<int>& strong, int num_colors) {
    std::set<int> w;
    for (int x : g.neighbors(v)) {
        int col = c.color(g, {g.edge_id(v, x), x});
        if (col > 0) w.insert(col);
    }
    int next = 1;
    while (static_cast<int>(w.size()) < size && next <= num_colors) {
        if (!strong.count(next) && !w.count(next)) w.insert(next);
        ++next;
    }
    return w;
}

inline std::set<int> strong_colors(const Graph& g, const IncidenceColoring& c, int v) {
    std::set<int> s;
    for (int x : g.neighbors(v)) {
        int col = c.color(g, {g.edge_id(v, x), v});
        if (col > 0) s.insert(col);
    }
    return s;
}

}  // namespace detail

struct DegenerateColoring {
    IncidenceColoring coloring;
    PeelStack peel;
    long long backtracks = 0;  // counting confirms plain greedy suffices
};

/// Incidence (Delta + 2k - 1, k)-coloring of a graph with degeneracy at
/// most k. Peels a smallest-last order, then re-inserts each vertex u
/// (p <= k live neighbors), coloring (u, uv_i) from a k-sized palette
/// container of v_i and (v_i, uv_i) outside container, strong set and the
/// colors just placed at u. A counting argument gives every greedy step a
/// free color; a bounded backtracking search over the 2p incidences backs
/// the greedy up and counts how often it is needed.
inline DegenerateColoring color_degenerate(const Graph& g, int k) {
    if (k < 1) throw HypothesisViolation("degenerate colorer needs k >= 1");
    DegeneracyOrder dg = degeneracy_order(g);
    if (dg.degeneracy > k)
        throw HypothesisViolation("degeneracy " + std::to_string(dg.degeneracy) +
                                      " exceeds k = " + std::to_string(k),
                                  core_witness(g, k));

    DegenerateColoring out;
    const int num_colors = g.max_degree() + 2 * k - 1;
    out.coloring = IncidenceColoring::blank(g, num_colors, k);

    std::vector<char> alive(static_cast<std::size_t>(g.vertex_count()), 1);
    for (int v : dg.order) {
        PeelStack::Entry e{v, {}};
        alive[static_cast<std::size_t>(v)] = 0;
        for (int u : g.neighbors(v))
            if (alive[static_cast<std::size_t>(u)]) e.neighbors.push_back(u);
        out.peel.entries.push_back(std::move(e));
    }

    IncidenceColoring& col = out.coloring;
    for (auto it = out.peel.entries.rbegin(); it != out.peel.entries.rend(); ++it) {
        const int u = it->vertex;
        const auto& nbrs = it->neighbors;  // increasing id
        const int p = static_cast<int>(nbrs.size());
        if (p == 0) continue;

        std::vector<std::set<int>> strong(static_cast<std::size_t>(p));
        std::vector<std::set<int>> container(static_cast<std::size_t>(p));
        for (int i = 0; i < p; ++i) {
            strong[static_cast<std::size_t>(i)] = detail::strong_colors(g, col, nbrs[static_cast<std::size_t>(i)]);
            container[static_cast<std::size_t>(i)] = detail::palette_container(
                g, col, nbrs[static_cast<std::size_t>(i)], k, strong[static_cast<std::size_t>(i)], num_colors);
        }

        // variables: (u, uv_i) for all i, then (v_i, uv_i) for all i
        std::vector<int> chosen(static_cast<std::size_t>(2 * p), 0);
        auto domain = [&](int slot) {
            std::vector<int> d;
            if (slot < p) {
                const auto& w = container[static_cast<std::size_t>(slot)];
                for (int c : w) {
                    bool used = false;
                    for (int j = 0; j < slot; ++j)
                        if (chosen[static_cast<std::size_t>(j)] == c) used = true;
                    if (!used) d.push_back(c);
                }
            } else {
                int i = slot - p;
                std::set<int> banned = container[static_cast<std::size_t>(i)];
                banned.insert(strong[static_cast<std::size_t>(i)].begin(),
                              strong[static_cast<std::size_t>(i)].end());
                for (int j = 0; j < p; ++j) banned.insert(chosen[static_cast<std::size_t>(j)]);
                for (int c = 1; c <= num_colors; ++c)
                    if (!banned.count(c)) d.push_back(c);
            }
            return d;
        };

        // greedy-first DFS; theory says the first branch never dies
        std::vector<std::vector<int>> doms(static_cast<std::size_t>(2 * p));
        int slot = 0;
        std::vector<std::size_t> pick(static_cast<std::size_t>(2 * p), 0);
        while (slot < 2 * p) {
            if (pick[static_cast<std::size_t>(slot)] == 0)
                doms[static_cast<std::size_t>(slot)] = domain(slot);
            auto& d = doms[static_cast<std::size_t>(slot)];
            if (pick[static_cast<std::size_t>(slot)] < d.size()) {
                chosen[static_cast<std::size_t>(slot)] = d[pick[static_cast<std::size_t>(slot)]++];
                ++slot;
                if (slot < 2 * p) pick[static_cast<std::size_t>(slot)] = 0;
            } else {
                chosen[static_cast<std::size_t>(slot)] = 0;
                --slot;
                ++out.backtracks;
                if (slot < 0)
                    throw InternalContradiction(
                        "degenerate extension found no coloring at vertex " + std::to_string(u),
                        g.to_edge_list());
                chosen[static_cast<std::size_t>(slot)] = 0;
            }
        }

        for (int i = 0; i < p; ++i) {
            int e = g.edge_id(u, nbrs[static_cast<std::size_t>(i)]);
            col.set(g, {e, u}, chosen[static_cast<std::size_t>(i)]);
            col.set(g, {e, nbrs[static_cast<std::size_t>(i)]}, chosen[static_cast<std::size_t>(p + i)]);
        }
    }
    return out;
}

}  // namespace incol
