#pragma once

#include "incol/graph.hpp"
#include "incol/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <vector>

namespace incol {

namespace detail {

/// Dinic max-flow on small networks with integer capacities.
class MaxFlow {
public:
    explicit MaxFlow(int nodes) : adj_(static_cast<std::size_t>(nodes)) {}

    void add_edge(int from, int to, long long cap, long long rcap = 0) {
        adj_[static_cast<std::size_t>(from)].push_back(
            {to, static_cast<int>(adj_[static_cast<std::size_t>(to)].size()), cap});
        adj_[static_cast<std::size_t>(to)].push_back(
            {from, static_cast<int>(adj_[static_cast<std::size_t>(from)].size()) - 1, rcap});
    }

    long long run(int s, int t) {
        long long flow = 0;
        while (bfs(s, t)) {
            iter_.assign(adj_.size(), 0);
            while (long long pushed = dfs(s, t, INF)) flow += pushed;
        }
        return flow;
    }

    /// Vertices reachable from s in the residual graph (the minimal
    /// source side of a minimum cut).
    std::vector<char> reachable_from(int s) const {
        std::vector<char> seen(adj_.size(), 0);
        std::queue<int> q;
        seen[static_cast<std::size_t>(s)] = 1;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (const auto& a : adj_[static_cast<std::size_t>(v)]) {
                if (a.cap > 0 && !seen[static_cast<std::size_t>(a.to)]) {
                    seen[static_cast<std::size_t>(a.to)] = 1;
                    q.push(a.to);
                }
            }
        }
        return seen;
    }

    /// Vertices with a residual path to t. Their complement is the
    /// maximal source side of a minimum cut.
    std::vector<char> reaching(int t) const {
        std::vector<char> seen(adj_.size(), 0);
        std::queue<int> q;
        seen[static_cast<std::size_t>(t)] = 1;
        q.push(t);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (const auto& a : adj_[static_cast<std::size_t>(v)]) {
                // residual capacity of the arc a.to -> v
                if (adj_[static_cast<std::size_t>(a.to)][static_cast<std::size_t>(a.rev)].cap > 0 &&
                    !seen[static_cast<std::size_t>(a.to)]) {
                    seen[static_cast<std::size_t>(a.to)] = 1;
                    q.push(a.to);
                }
            }
        }
        return seen;
    }

private:
    struct Arc {
        int to;
        int rev;
        long long cap;
    };
    static constexpr long long INF = (1LL << 62);

    bool bfs(int s, int t) {
        level_.assign(adj_.size(), -1);
        std::queue<int> q;
        level_[static_cast<std::size_t>(s)] = 0;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (const auto& a : adj_[static_cast<std::size_t>(v)]) {
                if (a.cap > 0 && level_[static_cast<std::size_t>(a.to)] < 0) {
                    level_[static_cast<std::size_t>(a.to)] = level_[static_cast<std::size_t>(v)] + 1;
                    q.push(a.to);
                }
            }
        }
        return level_[static_cast<std::size_t>(t)] >= 0;
    }

    long long dfs(int v, int t, long long limit) {
        if (v == t) return limit;
        for (auto& i = iter_[static_cast<std::size_t>(v)];
             i < static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); ++i) {
            Arc& a = adj_[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)];
            if (a.cap <= 0 || level_[static_cast<std::size_t>(a.to)] !=
                                  level_[static_cast<std::size_t>(v)] + 1)
                continue;
            long long pushed = dfs(a.to, t, std::min(limit, a.cap));
            if (pushed > 0) {
                a.cap -= pushed;
                adj_[static_cast<std::size_t>(a.to)][static_cast<std::size_t>(a.rev)].cap += pushed;
                return pushed;
            }
        }
        return 0;
    }

    std::vector<std::vector<Arc>> adj_;
    std::vector<int> level_;
    std::vector<int> iter_;
};

/// Density-threshold network: with lambda = p/q, the minimum cut equals
/// n*C - max over vertex sets S of (2q|E(S)| - p|S|). Returns that maximum
/// together with the requested source side.
struct DensityExcess {
    long long excess;           // max over all S (including the empty set)
    std::vector<int> source_side;  // a maximizing S
};

inline DensityExcess density_excess(const Graph& g, const BigInt& p_big, const BigInt& q_big,
                                    bool maximal_side) {
    const int n = g.vertex_count();
    if (p_big < 0 || q_big <= 0 || p_big > (BigInt(1) << 40) || q_big > (BigInt(1) << 40))
        throw std::overflow_error("density threshold out of supported range");
    const long long p = p_big.convert_to<long long>();
    const long long q = q_big.convert_to<long long>();
    const long long big = q * g.max_degree();
    const int s = n, t = n + 1;
    MaxFlow net(n + 2);
    for (int v = 0; v < n; ++v) {
        net.add_edge(s, v, big);
        net.add_edge(v, t, big + p - q * g.degree(v));
    }
    for (auto [u, v] : g.edges()) net.add_edge(u, v, q, q);
    long long flow = net.run(s, t);
    DensityExcess out;
    out.excess = static_cast<long long>(n) * big - flow;
    std::vector<char> mark;
    if (maximal_side) {
        mark = net.reaching(t);
        for (int v = 0; v < n; ++v)
            if (!mark[static_cast<std::size_t>(v)]) out.source_side.push_back(v);
    } else {
        mark = net.reachable_from(s);
        for (int v = 0; v < n; ++v)
            if (mark[static_cast<std::size_t>(v)]) out.source_side.push_back(v);
    }
    return out;
}

}  // namespace detail

struct MadResult {
    Rational value;
    std::vector<int> witness;  // vertex set achieving the value
};

/// Exact maximum average degree: max over nonempty induced subgraphs H of
/// 2|E(H)|/|V(H)|. Parametric search over candidate densities with a
/// min-cut feasibility test at each guess; candidate values have
/// denominator at most n, so the search stops once the enclosing interval
/// is narrower than 1/(n(n-1)). Edgeless graphs report 0.
inline MadResult mad(const Graph& g) {
    const int n = g.vertex_count();
    const long long m = g.edge_count();
    if (m == 0) return {Rational(0), n > 0 ? std::vector<int>{0} : std::vector<int>{}};

    Rational lo(2 * m, n);
    std::vector<int> witness(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) witness[static_cast<std::size_t>(v)] = v;
    Rational hi(g.max_degree());
    const Rational gap(1, static_cast<long long>(n) * (n - 1));

    while (hi - lo >= gap) {
        Rational mid = (lo + hi) / Rational(2);
        auto probe = detail::density_excess(g, mid.num(), mid.den(), false);
        if (probe.excess > 0) {
            // source side is a subgraph strictly denser than mid
            long long e_in = g.edges_within(probe.source_side);
            lo = Rational(2 * e_in, static_cast<long long>(probe.source_side.size()));
            witness = std::move(probe.source_side);
        } else {
            hi = mid;
        }
    }
    return {lo, std::move(witness)};
}

/// Brute force over all nonempty vertex subsets; exact arithmetic.
/// Validation oracle only, refuses n > 20.
inline MadResult mad_oracle(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 20) throw std::invalid_argument("mad_oracle: refuses n > 20");
    if (g.edge_count() == 0) return {Rational(0), n > 0 ? std::vector<int>{0} : std::vector<int>{}};
    std::vector<std::uint32_t> below(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : g.edges()) below[static_cast<std::size_t>(std::max(u, v))] |= 1u << std::min(u, v);
    Rational best(0);
    std::uint32_t best_mask = 1;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        long long e = 0;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1u) e += __builtin_popcount(below[static_cast<std::size_t>(v)] & mask);
        Rational density(2 * e, __builtin_popcount(mask));
        if (density > best) {
            best = density;
            best_mask = mask;
        }
    }
    std::vector<int> witness;
    for (int v = 0; v < n; ++v)
        if (best_mask >> v & 1u) witness.push_back(v);
    return {best, std::move(witness)};
}

/// Cheap strict test mad(g) < bound: one feasibility probe. The bound
/// fails exactly when some nonempty S has 2|E(S)| >= bound * |S|, i.e.
/// when the maximal min-cut source side is nonempty.
inline bool mad_below(const Graph& g, const Rational& bound) {
    if (g.edge_count() == 0) return Rational(0) < bound;
    if (bound <= Rational(0)) return false;
    auto probe = detail::density_excess(g, bound.num(), bound.den(), true);
    return probe.excess <= 0 && probe.source_side.empty();
}

struct MadBoundResult {
    bool satisfied;
    std::vector<int> witness;  // densest subgraph when the bound fails
};

inline MadBoundResult satisfies_mad_bound(const Graph& g, const Rational& bound) {
    if (mad_below(g, bound)) return {true, {}};
    return {false, mad(g).witness};
}

}  // namespace incol
