#pragma once

#include "incol/errors.hpp"
#include "incol/graph.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace incol {

/// One of the two (edge, endpoint) pairs an edge induces. `at` owns the
/// incidence: (e, u) is strong at u and weak at the other endpoint of e.
struct Incidence {
    int edge = -1;  // index into Graph::edges()
    int at = -1;    // owning endpoint

    friend bool operator==(const Incidence&, const Incidence&) = default;
    friend auto operator<=>(const Incidence&, const Incidence&) = default;
};

inline std::string to_string(const Graph& g, const Incidence& i) {
    auto [u, v] = g.edge(i.edge);
    return "(" + std::to_string(i.at) + "," + std::to_string(u) + "-" + std::to_string(v) + ")";
}

/// Flat index of an incidence: 2*edge + side, side 0 at the smaller endpoint.
inline int incidence_index(const Graph& g, const Incidence& i) {
    return 2 * i.edge + (i.at == g.edge(i.edge).first ? 0 : 1);
}

inline Incidence incidence_from_index(const Graph& g, int idx) {
    int e = idx / 2;
    auto [u, v] = g.edge(e);
    return Incidence{e, (idx % 2 == 0) ? u : v};
}

inline int incidence_count(const Graph& g) { return 2 * g.edge_count(); }

/// Total assignment of colors in 1..num_colors to every incidence of a
/// graph, plus the declared budget: num_colors available colors and a cap
/// weak_cap on how many distinct colors may appear on the weak incidences
/// of any one vertex (0 = no cap declared).
struct IncidenceColoring {
    int num_colors = 0;
    int weak_cap = 0;
    std::vector<int> colors;  // indexed by incidence_index; 0 = uncolored

    int color(const Graph& g, const Incidence& i) const {
        return colors[static_cast<std::size_t>(incidence_index(g, i))];
    }
    void set(const Graph& g, const Incidence& i, int c) {
        colors[static_cast<std::size_t>(incidence_index(g, i))] = c;
    }

    static IncidenceColoring blank(const Graph& g, int num_colors, int weak_cap) {
        return IncidenceColoring{num_colors, weak_cap,
                                 std::vector<int>(static_cast<std::size_t>(incidence_count(g)), 0)};
    }
};

struct VertexIncidences {
    std::vector<Incidence> strong;  // (e, v) for every edge e at v, by edge id
    std::vector<Incidence> weak;    // (e, u) for every edge e = uv, by edge id
};

/// Both lists have size d(v); empty for an isolated vertex.
inline VertexIncidences incidences_of(const Graph& g, int v) {
    VertexIncidences out;
    std::vector<std::pair<int, int>> at_v;  // (edge id, other endpoint)
    for (int u : g.neighbors(v)) at_v.emplace_back(g.edge_id(v, u), u);
    std::sort(at_v.begin(), at_v.end());
    for (auto [e, u] : at_v) {
        out.strong.push_back(Incidence{e, v});
        out.weak.push_back(Incidence{e, u});
    }
    return out;
}

/// Conflict relation: same owner, same edge, or the edge joining the two
/// owners is one of the two edges involved.
inline bool adjacent(const Graph& g, const Incidence& a, const Incidence& b) {
    if (a.at == b.at) return true;
    if (a.edge == b.edge) return true;
    auto other = [&](const Incidence& i) {
        auto [u, v] = g.edge(i.edge);
        return i.at == u ? v : u;
    };
    return other(a) == b.at || other(b) == a.at;
}

/// Colors unavailable for the uncolored incidence (u, uv) under a partial
/// coloring: weak incidences of u, strong incidences of u, and strong
/// incidences of the far endpoint v.
struct ForbiddenSet {
    std::set<int> colors;       // union of the three parts
    std::set<int> weak_of_u;    // colors on (x, xu)
    std::set<int> strong_of_u;  // colors on (u, ux)
    std::set<int> strong_of_v;  // colors on (v, vx)
};

inline ForbiddenSet forbidden_set(const Graph& g, const IncidenceColoring& partial,
                                  const Incidence& inc) {
    ForbiddenSet out;
    const int u = inc.at;
    auto [a, b] = g.edge(inc.edge);
    const int v = (u == a) ? b : a;
    for (int x : g.neighbors(u)) {
        int e = g.edge_id(u, x);
        if (int c = partial.color(g, {e, x}); c > 0) out.weak_of_u.insert(c);
        if (e != inc.edge)
            if (int c = partial.color(g, {e, u}); c > 0) out.strong_of_u.insert(c);
    }
    for (int x : g.neighbors(v)) {
        int e = g.edge_id(v, x);
        if (e == inc.edge) continue;
        if (int c = partial.color(g, {e, v}); c > 0) out.strong_of_v.insert(c);
    }
    out.colors = out.weak_of_u;
    out.colors.insert(out.strong_of_u.begin(), out.strong_of_u.end());
    out.colors.insert(out.strong_of_v.begin(), out.strong_of_v.end());
    return out;
}

struct VerifyResult {
    enum class Reason { none, strong_strong, strong_weak, weak_palette };

    bool accepted = true;
    Reason reason = Reason::none;
    int vertex = -1;
    Incidence first{}, second{};     // conflicting pair, when applicable
    std::vector<int> weak_palette;   // offending palette, when applicable

    std::string message(const Graph& g) const {
        if (accepted) return "accepted";
        std::string at = "vertex " + std::to_string(vertex);
        switch (reason) {
            case Reason::strong_strong:
                return at + ": strong incidences " + to_string(g, first) + " and " +
                       to_string(g, second) + " share a color";
            case Reason::strong_weak:
                return at + ": strong incidence " + to_string(g, first) +
                       " matches incidence " + to_string(g, second);
            case Reason::weak_palette: {
                std::string s = at + ": weak palette {";
                for (std::size_t i = 0; i < weak_palette.size(); ++i)
                    s += (i ? "," : "") + std::to_string(weak_palette[i]);
                return s + "} too large";
            }
            default: return "accepted";
        }
    }
};

namespace detail {

/// Shared verification walk. Skips uncolored incidences when `partial`,
/// so the same code audits both finished and in-progress colorings.
inline VerifyResult verify_walk(const Graph& g, const IncidenceColoring& c, int ell,
                                bool partial) {
    if (c.colors.size() != static_cast<std::size_t>(incidence_count(g)))
        throw MalformedColoring("assignment covers " + std::to_string(c.colors.size()) +
                                " incidences, graph has " + std::to_string(incidence_count(g)));
    for (int idx = 0; idx < incidence_count(g); ++idx) {
        int col = c.colors[static_cast<std::size_t>(idx)];
        if (col == 0 && partial) continue;
        if (col < 1 || col > c.num_colors)
            throw MalformedColoring("color " + std::to_string(col) + " of incidence " +
                                    to_string(g, incidence_from_index(g, idx)) +
                                    " outside 1.." + std::to_string(c.num_colors));
    }
    // Per-vertex rule: a strong incidence of v must differ from every other
    // incidence of v. Witnesses are found scanning vertices then edge pairs
    // in ascending order, so the reported one is lexicographically least.
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto inc = incidences_of(g, v);
        const int d = static_cast<int>(inc.strong.size());
        auto col = [&](const Incidence& i) { return c.color(g, i); };
        for (int j = 0; j < d; ++j) {
            for (int i = 0; i < j; ++i) {
                int si = col(inc.strong[static_cast<std::size_t>(i)]);
                int sj = col(inc.strong[static_cast<std::size_t>(j)]);
                int wi = col(inc.weak[static_cast<std::size_t>(i)]);
                int wj = col(inc.weak[static_cast<std::size_t>(j)]);
                if (si > 0 && si == sj)
                    return {false, VerifyResult::Reason::strong_strong, v,
                            inc.strong[static_cast<std::size_t>(i)],
                            inc.strong[static_cast<std::size_t>(j)], {}};
                if (si > 0 && si == wj)
                    return {false, VerifyResult::Reason::strong_weak, v,
                            inc.strong[static_cast<std::size_t>(i)],
                            inc.weak[static_cast<std::size_t>(j)], {}};
                if (sj > 0 && sj == wi)
                    return {false, VerifyResult::Reason::strong_weak, v,
                            inc.strong[static_cast<std::size_t>(j)],
                            inc.weak[static_cast<std::size_t>(i)], {}};
            }
            int sj = col(inc.strong[static_cast<std::size_t>(j)]);
            int wj = col(inc.weak[static_cast<std::size_t>(j)]);
            if (sj > 0 && sj == wj)
                return {false, VerifyResult::Reason::strong_weak, v,
                        inc.strong[static_cast<std::size_t>(j)],
                        inc.weak[static_cast<std::size_t>(j)], {}};
        }
        if (ell > 0) {
            std::set<int> palette;
            for (const auto& w : inc.weak)
                if (int cw = col(w); cw > 0) palette.insert(cw);
            if (static_cast<int>(palette.size()) > ell)
                return {false, VerifyResult::Reason::weak_palette, v, {}, {},
                        std::vector<int>(palette.begin(), palette.end())};
        }
    }
    return {};
}

}  // namespace detail

/// Accepts iff the coloring is proper and, when ell > 0, every vertex sees
/// at most ell distinct colors on its weak incidences. The assignment must
/// be total; colors outside 1..num_colors throw MalformedColoring.
inline VerifyResult verify(const Graph& g, const IncidenceColoring& c, int ell = 0) {
    for (int idx = 0; idx < incidence_count(g); ++idx)
        if (c.colors[static_cast<std::size_t>(idx)] == 0)
            throw MalformedColoring("incidence " + to_string(g, incidence_from_index(g, idx)) +
                                    " uncolored");
    return detail::verify_walk(g, c, ell, false);
}

/// Same checks restricted to colored incidences; used while colorings are
/// being extended.
inline VerifyResult verify_partial(const Graph& g, const IncidenceColoring& c, int ell = 0) {
    return detail::verify_walk(g, c, ell, true);
}

// --- coloring exchange document ---------------------------------------------

/// Document fields: n, edges, num_colors, weak_cap, assignment sorted by
/// (edge index, at). nlohmann::json orders keys alphabetically, so dumping
/// the same coloring twice is byte-identical.
inline nlohmann::json coloring_to_json(const Graph& g, const IncidenceColoring& c) {
    nlohmann::json j;
    j["n"] = g.vertex_count();
    auto edges = nlohmann::json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    j["num_colors"] = c.num_colors;
    j["weak_cap"] = c.weak_cap;
    auto assignment = nlohmann::json::array();
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        for (int at : {u, v}) {
            nlohmann::json row;
            row["edge"] = {u, v};
            row["at"] = at;
            row["color"] = c.color(g, {e, at});
            assignment.push_back(std::move(row));
        }
    }
    j["assignment"] = std::move(assignment);
    return j;
}

inline std::pair<Graph, IncidenceColoring> coloring_from_json(const nlohmann::json& j) {
    try {
        int n = j.at("n").get<int>();
        std::vector<std::pair<int, int>> pairs;
        for (const auto& e : j.at("edges")) pairs.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        Graph g = Graph::from_edges(n, pairs);
        if (g.edge_count() != static_cast<int>(pairs.size()))
            throw MalformedColoring("duplicate edges in document");
        IncidenceColoring c = IncidenceColoring::blank(g, j.at("num_colors").get<int>(),
                                                       j.at("weak_cap").get<int>());
        for (const auto& row : j.at("assignment")) {
            int u = row.at("edge").at(0).get<int>();
            int v = row.at("edge").at(1).get<int>();
            int at = row.at("at").get<int>();
            int e = g.edge_id(u, v);
            if (e < 0) throw MalformedColoring("assignment references missing edge");
            if (at != u && at != v) throw MalformedColoring("'at' is not an endpoint of its edge");
            if (c.color(g, {e, at}) != 0) throw MalformedColoring("incidence assigned twice");
            int col = row.at("color").get<int>();
            if (col < 1) throw MalformedColoring("color must be positive");
            c.set(g, {e, at}, col);
        }
        for (int idx = 0; idx < incidence_count(g); ++idx)
            if (c.colors[static_cast<std::size_t>(idx)] == 0)
                throw MalformedColoring("assignment not total");
        return {std::move(g), std::move(c)};
    } catch (const nlohmann::json::exception& e) {
        throw MalformedColoring(std::string("bad coloring document: ") + e.what());
    }
}

}  // namespace incol
