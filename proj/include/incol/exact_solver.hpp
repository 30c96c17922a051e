#pragma once

#include "incol/graph.hpp"
#include "incol/model.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace incol {

namespace detail {

/// Backtracking search over the incidence conflict structure. Variables
/// are incidences in decreasing conflict-degree order; values are colors
/// with symmetry breaking: a color may be used only if every smaller color
/// already appears earlier on the current path. Weak caps prune as soon as
/// some vertex's weak palette would exceed ell.
class IncidenceSearch {
public:
    IncidenceSearch(const Graph& g, int ell) : g_(g), ell_(ell) {
        const int total = incidence_count(g);
        conflicts_.resize(static_cast<std::size_t>(total));
        for (int i = 0; i < total; ++i) {
            Incidence a = incidence_from_index(g, i);
            for (int j = i + 1; j < total; ++j) {
                Incidence b = incidence_from_index(g, j);
                if (adjacent(g, a, b)) {
                    conflicts_[static_cast<std::size_t>(i)].push_back(j);
                    conflicts_[static_cast<std::size_t>(j)].push_back(i);
                }
            }
        }
        order_.resize(static_cast<std::size_t>(total));
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](int x, int y) {
            return conflicts_[static_cast<std::size_t>(x)].size() >
                   conflicts_[static_cast<std::size_t>(y)].size();
        });
        weak_at_.resize(static_cast<std::size_t>(total));
        for (int i = 0; i < total; ++i) {
            Incidence inc = incidence_from_index(g, i);
            auto [u, v] = g.edge(inc.edge);
            weak_at_[static_cast<std::size_t>(i)] = (inc.at == u) ? v : u;
        }
    }

    /// True iff a proper coloring with k colors (respecting ell) exists.
    /// `nodes` accumulates assignments tried; exceeding `limit` aborts.
    bool solve(int k, long long limit, long long& nodes, std::vector<int>& out, bool& aborted) {
        k_ = k;
        limit_ = limit;
        aborted = false;
        assign_.assign(conflicts_.size(), 0);
        weak_count_.assign(static_cast<std::size_t>(g_.vertex_count()) *
                               static_cast<std::size_t>(k + 1),
                           0);
        weak_distinct_.assign(static_cast<std::size_t>(g_.vertex_count()), 0);
        bool found = dfs(0, 1, nodes, aborted);
        if (found) out = assign_;
        return found;
    }

private:
    bool dfs(std::size_t pos, int introduced, long long& nodes, bool& aborted) {
        if (pos == order_.size()) return true;
        const int var = order_[pos];
        const int top = std::min(k_, introduced);
        for (int c = 1; c <= top; ++c) {
            if (!can_place(var, c)) continue;
            if (++nodes > limit_) {
                aborted = true;
                return false;
            }
            place(var, c);
            if (dfs(pos + 1, std::max(introduced, c + 1), nodes, aborted)) return true;
            unplace(var, c);
            if (aborted) return false;
        }
        return false;
    }

    bool can_place(int var, int c) const {
        for (int other : conflicts_[static_cast<std::size_t>(var)])
            if (assign_[static_cast<std::size_t>(other)] == c) return false;
        if (ell_ > 0) {
            int u = weak_at_[static_cast<std::size_t>(var)];
            if (weak_count_[cell(u, c)] == 0 &&
                weak_distinct_[static_cast<std::size_t>(u)] >= ell_)
                return false;
        }
        return true;
    }

    void place(int var, int c) {
        assign_[static_cast<std::size_t>(var)] = c;
        int u = weak_at_[static_cast<std::size_t>(var)];
        if (weak_count_[cell(u, c)]++ == 0) ++weak_distinct_[static_cast<std::size_t>(u)];
    }

    void unplace(int var, int c) {
        assign_[static_cast<std::size_t>(var)] = 0;
        int u = weak_at_[static_cast<std::size_t>(var)];
        if (--weak_count_[cell(u, c)] == 0) --weak_distinct_[static_cast<std::size_t>(u)];
    }

    std::size_t cell(int vertex, int color) const {
        return static_cast<std::size_t>(vertex) * static_cast<std::size_t>(k_ + 1) +
               static_cast<std::size_t>(color);
    }

    const Graph& g_;
    int ell_;
    int k_ = 0;
    long long limit_ = 0;
    std::vector<std::vector<int>> conflicts_;
    std::vector<int> order_;
    std::vector<int> weak_at_;
    std::vector<int> assign_;
    std::vector<int> weak_count_;
    std::vector<int> weak_distinct_;
};

inline void check_incidence_cap(const Graph& g) {
    if (incidence_count(g) > 40)
        throw HypothesisViolation("exact solver handles at most 40 incidences, got " +
                                  std::to_string(incidence_count(g)));
}

}  // namespace detail

struct FeasibleResult {
    enum class Status { satisfiable, unsatisfiable, inconclusive };
    Status status = Status::unsatisfiable;
    IncidenceColoring witness;  // populated when satisfiable
    long long nodes_explored = 0;
};

/// Does g admit an incidence (k, ell)-coloring? ell = 0 means no weak cap.
/// Exhausted search certifies a false answer; hitting the node limit is
/// reported as inconclusive.
inline FeasibleResult feasible(const Graph& g, int k, int ell,
                               long long node_limit = 50'000'000) {
    detail::check_incidence_cap(g);
    FeasibleResult res;
    if (incidence_count(g) == 0) {
        res.status = FeasibleResult::Status::satisfiable;
        res.witness = IncidenceColoring::blank(g, std::max(k, 0), ell);
        return res;
    }
    if (k <= 0) return res;
    detail::IncidenceSearch search(g, ell);
    std::vector<int> out;
    bool aborted = false;
    bool found = search.solve(k, node_limit, res.nodes_explored, out, aborted);
    if (found) {
        res.status = FeasibleResult::Status::satisfiable;
        res.witness = IncidenceColoring{k, ell, std::move(out)};
    } else {
        res.status = aborted ? FeasibleResult::Status::inconclusive
                             : FeasibleResult::Status::unsatisfiable;
    }
    return res;
}

struct ChiResult {
    enum class Status { exact, inconclusive };
    Status status = Status::exact;
    int chi = 0;
    int lower = 0, upper = 0;  // best-known bounds when inconclusive
    IncidenceColoring witness;
    long long nodes_explored = 0;
};

/// Exact incidence chromatic number by iterative deepening from the
/// degree lower bound. The search at each k shares one node budget.
inline ChiResult chi_incidence(const Graph& g, long long node_limit = 50'000'000) {
    detail::check_incidence_cap(g);
    ChiResult res;
    if (g.edge_count() == 0) {
        res.witness = IncidenceColoring::blank(g, 0, 0);
        return res;
    }
    const int delta = g.max_degree();
    detail::IncidenceSearch search(g, 0);
    for (int k = delta + 1; k <= incidence_count(g); ++k) {
        std::vector<int> out;
        bool aborted = false;
        bool found =
            search.solve(k, node_limit - res.nodes_explored, res.nodes_explored, out, aborted);
        if (found) {
            res.chi = k;
            res.witness = IncidenceColoring{k, 0, std::move(out)};
            return res;
        }
        if (aborted) {
            res.status = ChiResult::Status::inconclusive;
            res.lower = k;
            res.upper = 2 * delta;
            return res;
        }
    }
    // unreachable: 2m pairwise distinct colors always work
    res.status = ChiResult::Status::inconclusive;
    res.lower = incidence_count(g);
    res.upper = incidence_count(g);
    return res;
}

}  // namespace incol
