#pragma once

#include "incol/colorer_degenerate.hpp"  // PeelStack, palette helpers
#include "incol/errors.hpp"
#include "incol/graph.hpp"
#include "incol/mad.hpp"
#include "incol/model.hpp"
#include "incol/rational.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

namespace incol {

/// Palette arithmetic for the generic colorer: t = ceil((1+alpha)*k)
/// colors are reserved per weak palette minus one; the full deck has
/// d + t - 1 colors and the weak cap is t - 1. Rounding the non-integer
/// budget up preserves every counting inequality the extension relies on.
struct Budget {
    int k = 0;
    Rational alpha;
    int d = 0;  // max degree bound, fixed at the top-level call
    int t = 0;  // ceil((1+alpha)*k)

    int num_colors() const { return d + t - 1; }
    int weak_cap() const { return t - 1; }
    /// Degree from which a neighbor counts as high in the peel test.
    int high_threshold() const { return d - k + 2; }

    static Budget make(int k, const Rational& alpha, int d) {
        if (k < 1) throw HypothesisViolation("budget needs k >= 1");
        if (alpha.is_negative()) throw HypothesisViolation("budget needs alpha >= 0");
        Budget b;
        b.k = k;
        b.alpha = alpha;
        b.d = d;
        b.t = static_cast<int>(((Rational(1) + alpha) * Rational(k)).ceil().convert_to<long long>());
        return b;
    }
};

/// Smallest max-degree for which the peeling guarantee kicks in:
/// k(k+3)/2 - 2 when alpha = 0, otherwise ceil(k(3a+1)/(2a) - 2).
inline int required_delta(int k, const Rational& alpha) {
    if (k < 1) throw HypothesisViolation("required_delta needs k >= 1");
    if (alpha.is_negative()) throw HypothesisViolation("required_delta needs alpha >= 0");
    if (alpha.is_zero())
        return static_cast<int>((static_cast<long long>(k) * (k + 3)) / 2 - 2);
    Rational bound = (Rational(3) * alpha + Rational(1)) / (Rational(2) * alpha) * Rational(k) -
                     Rational(2);
    return static_cast<int>(bound.ceil().convert_to<long long>());
}

/// Smallest-id vertex of degree p <= k-1 with at most t-p neighbors of
/// degree >= d-k+2, or nothing. Removing such a vertex keeps every
/// extension obligation satisfiable.
inline std::optional<int> find_reducible_vertex(const Graph& g, const Budget& b) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        const int p = g.degree(v);
        if (p > b.k - 1) continue;
        int high = 0;
        for (int u : g.neighbors(v))
            if (g.degree(u) >= b.high_threshold()) ++high;
        if (high <= b.t - p) return v;
    }
    return std::nullopt;
}

struct GenericColoring {
    IncidenceColoring coloring;
    Budget budget;
    PeelStack peel;
};

struct GenericOptions {
    std::ostream* trace = nullptr;  // one line per peel when set
    bool selfcheck = false;         // verify the partial coloring after every step
};

/// Peels reducible vertices to exhaustion, then unwinds with the
/// three-group extension: with u's neighbors v_1..v_p sorted by decreasing
/// degree and s = t - p, the incidences (v_i, uv_i) for i <= s are colored
/// outside W_i and S_i, then (u, uv_i) by decreasing i inside W_i, then
/// the remaining (v_i, uv_i) outside W_i, S_i and the colors placed at u.
/// Availability of each choice is asserted; a stalled peel or an empty
/// choice set contradicts the density hypothesis and throws.
inline GenericColoring color_generic(const Graph& g, int k, const Rational& alpha,
                                     const GenericOptions& opt = {}) {
    auto gate = satisfies_mad_bound(g, Rational(k));
    if (!gate.satisfied)
        throw HypothesisViolation("maximum average degree is not below " + std::to_string(k),
                                  gate.witness);
    const int d = std::max(g.max_degree(), required_delta(k, alpha));
    const Budget budget = Budget::make(k, alpha, d);

    GenericColoring out;
    out.budget = budget;
    out.coloring = IncidenceColoring::blank(g, budget.num_colors(), budget.weak_cap());

    // peel with an overlay of alive flags; the Graph itself stays immutable
    const int n = g.vertex_count();
    std::vector<char> alive(static_cast<std::size_t>(n), 1);
    std::vector<int> deg(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
    int remaining = n;
    while (remaining > 0) {
        int found = -1;
        for (int v = 0; v < n && found < 0; ++v) {
            if (!alive[static_cast<std::size_t>(v)]) continue;
            const int p = deg[static_cast<std::size_t>(v)];
            if (p > budget.k - 1) continue;
            int high = 0;
            for (int u : g.neighbors(v))
                if (alive[static_cast<std::size_t>(u)] &&
                    deg[static_cast<std::size_t>(u)] >= budget.high_threshold())
                    ++high;
            if (high <= budget.t - p) found = v;
        }
        if (found < 0) {
            std::vector<std::pair<int, int>> left;
            for (auto [u, v] : g.edges())
                if (alive[static_cast<std::size_t>(u)] && alive[static_cast<std::size_t>(v)])
                    left.emplace_back(u, v);
            throw InternalContradiction(
                "peeling stalled with " + std::to_string(remaining) + " vertices left",
                Graph::from_edges(n, left).to_edge_list());
        }
        PeelStack::Entry entry{found, {}};
        for (int u : g.neighbors(found))
            if (alive[static_cast<std::size_t>(u)]) {
                entry.neighbors.push_back(u);
                --deg[static_cast<std::size_t>(u)];
            }
        alive[static_cast<std::size_t>(found)] = 0;
        --remaining;
        out.peel.entries.push_back(std::move(entry));
    }

    // unwind
    IncidenceColoring& col = out.coloring;
    std::vector<int> cur_deg(static_cast<std::size_t>(n), 0);
    const int num_colors = budget.num_colors();
    auto fail = [&](const std::string& what) {
        throw InternalContradiction("extension invariant failed: " + what, g.to_edge_list());
    };
    for (auto it = out.peel.entries.rbegin(); it != out.peel.entries.rend(); ++it) {
        const int u = it->vertex;
        const int p = static_cast<int>(it->neighbors.size());
        cur_deg[static_cast<std::size_t>(u)] = p;
        for (int v : it->neighbors) ++cur_deg[static_cast<std::size_t>(v)];
        if (p == 0) continue;

        std::vector<int> nbrs = it->neighbors;
        std::sort(nbrs.begin(), nbrs.end(), [&](int a, int b) {
            if (cur_deg[static_cast<std::size_t>(a)] != cur_deg[static_cast<std::size_t>(b)])
                return cur_deg[static_cast<std::size_t>(a)] > cur_deg[static_cast<std::size_t>(b)];
            return a < b;
        });
        const int s = budget.t - p;
        if (s < 1) fail("split index below 1");
        for (int i = s; i < p; ++i)
            if (cur_deg[static_cast<std::size_t>(nbrs[static_cast<std::size_t>(i)])] >
                budget.d - budget.k + 1)
                fail("low-degree group contains a high-degree neighbor");

        std::vector<std::set<int>> strong(static_cast<std::size_t>(p));
        std::vector<std::set<int>> container(static_cast<std::size_t>(p));
        for (int i = 0; i < p; ++i) {
            int v = nbrs[static_cast<std::size_t>(i)];
            strong[static_cast<std::size_t>(i)] = detail::strong_colors(g, col, v);
            container[static_cast<std::size_t>(i)] = detail::palette_container(
                g, col, v, budget.t - 1, strong[static_cast<std::size_t>(i)], num_colors);
            if (static_cast<int>(container[static_cast<std::size_t>(i)].size()) != budget.t - 1)
                fail("palette container could not be completed");
        }

        std::vector<int> far(static_cast<std::size_t>(p), 0);   // (v_i, uv_i)
        std::vector<int> near(static_cast<std::size_t>(p), 0);  // (u, uv_i)
        for (int i = 0; i < s && i < p; ++i) {
            std::set<int> banned = container[static_cast<std::size_t>(i)];
            banned.insert(strong[static_cast<std::size_t>(i)].begin(),
                          strong[static_cast<std::size_t>(i)].end());
            int c = detail::smallest_free(banned, num_colors);
            if (c == 0) fail("no color outside container and strong set");
            far[static_cast<std::size_t>(i)] = c;
        }
        for (int i = p - 1; i >= 0; --i) {
            std::set<int> used_at_u;
            for (int j = 0; j < p; ++j) {
                if (far[static_cast<std::size_t>(j)] > 0) used_at_u.insert(far[static_cast<std::size_t>(j)]);
                if (near[static_cast<std::size_t>(j)] > 0) used_at_u.insert(near[static_cast<std::size_t>(j)]);
            }
            int c = 0;
            for (int w : container[static_cast<std::size_t>(i)])
                if (!used_at_u.count(w)) {
                    c = w;
                    break;
                }
            if (c == 0) fail("palette container exhausted at the center");
            near[static_cast<std::size_t>(i)] = c;
        }
        for (int i = s; i < p; ++i) {
            std::set<int> banned = container[static_cast<std::size_t>(i)];
            banned.insert(strong[static_cast<std::size_t>(i)].begin(),
                          strong[static_cast<std::size_t>(i)].end());
            int pool = 0;
            for (int c = 1; c <= num_colors; ++c)
                if (!banned.count(c)) ++pool;
            if (pool < budget.k) fail("low-degree group has fewer than k raw candidates");
            for (int j = 0; j < p; ++j) banned.insert(near[static_cast<std::size_t>(j)]);
            int c = detail::smallest_free(banned, num_colors);
            if (c == 0) fail("no color left for a low-degree neighbor");
            far[static_cast<std::size_t>(i)] = c;
        }

        for (int i = 0; i < p; ++i) {
            int v = nbrs[static_cast<std::size_t>(i)];
            int e = g.edge_id(u, v);
            col.set(g, {e, u}, near[static_cast<std::size_t>(i)]);
            col.set(g, {e, v}, far[static_cast<std::size_t>(i)]);
        }
        if (opt.trace) {
            *opt.trace << "peel " << u << " p=" << p << " s=" << s << " colors";
            for (int i = 0; i < p; ++i)
                *opt.trace << " " << near[static_cast<std::size_t>(i)] << "/"
                           << far[static_cast<std::size_t>(i)];
            *opt.trace << "\n";
        }
        if (opt.selfcheck) {
            auto res = verify_partial(g, col, budget.weak_cap());
            if (!res.accepted) fail("partial coloring rejected: " + res.message(g));
        }
    }
    return out;
}

}  // namespace incol
