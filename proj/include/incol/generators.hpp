#pragma once

#include "incol/errors.hpp"
#include "incol/graph.hpp"
#include "incol/mad.hpp"
#include "incol/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace incol {

namespace detail {

/// Deterministic helper over the fully specified mt19937_64 stream;
/// std::uniform_int_distribution is implementation-defined, so bounded
/// draws go through plain modulo instead.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    std::uint64_t next() { return eng_(); }
    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
    template <class T>
    void shuffle(std::vector<T>& v) {
        for (int i = static_cast<int>(v.size()) - 1; i > 0; --i)
            std::swap(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(below(i + 1))]);
    }

private:
    std::mt19937_64 eng_;
};

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t x = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

/// Mutable edge accumulator used only while a graph is being grown.
struct EdgeAccum {
    int n;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> degree;
    std::set<std::pair<int, int>> seen;

    explicit EdgeAccum(int n_) : n(n_), degree(static_cast<std::size_t>(n_), 0) {}

    bool has(int u, int v) const { return seen.count({std::min(u, v), std::max(u, v)}) > 0; }

    void add(int u, int v) {
        seen.insert({std::min(u, v), std::max(u, v)});
        edges.emplace_back(u, v);
        ++degree[static_cast<std::size_t>(u)];
        ++degree[static_cast<std::size_t>(v)];
    }

    Graph graph() const { return Graph::from_edges(n, edges); }

    Graph graph_with(int u, int v) const {
        auto copy = edges;
        copy.emplace_back(u, v);
        return Graph::from_edges(n, copy);
    }
};

}  // namespace detail

/// Parsed generator description, e.g. "grid(3,3)" or "hub_sparse(40,12,4)".
struct GeneratorSpec {
    enum class Kind {
        path,               // path(n)
        cycle,              // cycle(n)
        star,               // star(n): center plus n leaves
        complete,           // complete(n)
        grid,               // grid(a,b): planar, triangle-free
        grid_apex,          // grid_apex(a,b,h): grid plus an apex joined to h
                            // pairwise non-adjacent boundary vertices; stays
                            // planar and triangle-free
        hub_sparse,         // hub_sparse(n, max_degree, mad_target)
        random_degenerate,  // random_degenerate(n, k)
        gnm,                // gnm(n, m): uniform random simple graph
    };

    Kind kind;
    long long a = 0, b = 0, c = 0;
    Rational mad_target;

    static GeneratorSpec parse(std::string_view text);
    std::string str() const;
};

inline GeneratorSpec GeneratorSpec::parse(std::string_view text) {
    auto open = text.find('(');
    auto close = text.rfind(')');
    if (open == std::string_view::npos || close == std::string_view::npos || close < open)
        throw ParseError("generator spec must look like kind(args): '" + std::string(text) + "'");
    std::string name(text.substr(0, open));
    std::vector<std::string> args;
    std::string_view inner = text.substr(open + 1, close - open - 1);
    std::size_t start = 0;
    while (start <= inner.size() && !inner.empty()) {
        auto comma = inner.find(',', start);
        auto piece = inner.substr(start, comma == std::string_view::npos ? inner.size() - start
                                                                         : comma - start);
        args.emplace_back(piece);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    auto want = [&](std::size_t k) {
        if (args.size() != k)
            throw ParseError(name + " takes " + std::to_string(k) + " argument(s)");
    };
    auto num = [&](std::size_t i) {
        Rational r = Rational::parse(args[i]);
        if (!r.is_integer()) throw ParseError("argument " + args[i] + " must be an integer");
        return r.num().convert_to<long long>();
    };
    GeneratorSpec s;
    if (name == "path") { s.kind = Kind::path; want(1); s.a = num(0); }
    else if (name == "cycle") { s.kind = Kind::cycle; want(1); s.a = num(0); }
    else if (name == "star") { s.kind = Kind::star; want(1); s.a = num(0); }
    else if (name == "complete") { s.kind = Kind::complete; want(1); s.a = num(0); }
    else if (name == "grid") { s.kind = Kind::grid; want(2); s.a = num(0); s.b = num(1); }
    else if (name == "grid_apex") { s.kind = Kind::grid_apex; want(3); s.a = num(0); s.b = num(1); s.c = num(2); }
    else if (name == "hub_sparse") {
        s.kind = Kind::hub_sparse;
        want(3);
        s.a = num(0);
        s.b = num(1);
        s.mad_target = Rational::parse(args[2]);
    } else if (name == "random_degenerate") { s.kind = Kind::random_degenerate; want(2); s.a = num(0); s.b = num(1); }
    else if (name == "gnm") { s.kind = Kind::gnm; want(2); s.a = num(0); s.b = num(1); }
    else throw ParseError("unknown generator kind '" + name + "'");
    return s;
}

inline std::string GeneratorSpec::str() const {
    auto two = [&](const char* n) { return std::string(n) + "(" + std::to_string(a) + "," + std::to_string(b) + ")"; };
    switch (kind) {
        case Kind::path: return "path(" + std::to_string(a) + ")";
        case Kind::cycle: return "cycle(" + std::to_string(a) + ")";
        case Kind::star: return "star(" + std::to_string(a) + ")";
        case Kind::complete: return "complete(" + std::to_string(a) + ")";
        case Kind::grid: return two("grid");
        case Kind::grid_apex:
            return "grid_apex(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
        case Kind::hub_sparse:
            return "hub_sparse(" + std::to_string(a) + "," + std::to_string(b) + "," + mad_target.str() + ")";
        case Kind::random_degenerate: return two("random_degenerate");
        case Kind::gnm: return two("gnm");
    }
    return "?";
}

namespace detail {

inline Graph gen_grid(int rows, int cols) {
    if (rows < 1 || cols < 1) throw GenerationFailure("grid needs positive dimensions");
    std::vector<std::pair<int, int>> edges;
    auto id = [cols](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
        }
    return Graph::from_edges(rows * cols, edges);
}

/// Boundary vertices of a grid, walked clockwise from (0,0).
inline std::vector<int> grid_boundary(int rows, int cols) {
    auto id = [cols](int r, int c) { return r * cols + c; };
    std::vector<int> ring;
    if (rows == 1) {
        for (int c = 0; c < cols; ++c) ring.push_back(id(0, c));
        return ring;
    }
    if (cols == 1) {
        for (int r = 0; r < rows; ++r) ring.push_back(id(r, 0));
        return ring;
    }
    for (int c = 0; c < cols; ++c) ring.push_back(id(0, c));
    for (int r = 1; r < rows; ++r) ring.push_back(id(r, cols - 1));
    for (int c = cols - 2; c >= 0; --c) ring.push_back(id(rows - 1, c));
    for (int r = rows - 2; r >= 1; --r) ring.push_back(id(r, 0));
    return ring;
}

inline Graph gen_grid_apex(int rows, int cols, int spokes) {
    Graph grid = gen_grid(rows, cols);
    auto ring = grid_boundary(rows, cols);
    const int apex = rows * cols;
    std::vector<std::pair<int, int>> edges(grid.edges());
    std::vector<int> picked;
    // every other ring position, skipping anything adjacent to an earlier
    // pick, keeps the attachment set independent (hence no triangles) and
    // on the outer face (hence planar)
    for (std::size_t i = 0; i < ring.size() && static_cast<int>(picked.size()) < spokes; i += 2) {
        int cand = ring[i];
        bool clash = false;
        for (int p : picked)
            if (grid.has_edge(p, cand)) clash = true;
        if (!clash) picked.push_back(cand);
    }
    if (static_cast<int>(picked.size()) < spokes)
        throw GenerationFailure("grid_apex: boundary too short for " + std::to_string(spokes) +
                                " spokes");
    for (int p : picked) edges.emplace_back(p, apex);
    return Graph::from_edges(rows * cols + 1, edges);
}

inline Graph gen_hub_sparse(int n, int dmax, const Rational& madt, std::uint64_t seed) {
    if (n < dmax + 1) throw GenerationFailure("hub_sparse: need n >= max_degree + 1");
    if (dmax < 1) throw GenerationFailure("hub_sparse: max_degree must be positive");
    const int hub = 0;
    int cap = static_cast<int>(madt.ceil().convert_to<long long>());
    cap = std::min(std::max(cap, 2), dmax - 1);
    if (cap < 1) cap = 1;

    for (int attempt = 0; attempt < 64; ++attempt) {
        Rng rng(mix_seed(seed, static_cast<std::uint64_t>(attempt)));
        EdgeAccum acc(n);
        auto try_add = [&](int u, int v) {
            if (u == v || acc.has(u, v)) return false;
            if (!mad_below(acc.graph_with(u, v), madt)) return false;
            acc.add(u, v);
            return true;
        };
        // sparse random forest
        for (int v = 1; v < n; ++v) {
            if (rng.below(10) >= 9) continue;
            int parent = rng.below(v);
            if (parent != hub && acc.degree[static_cast<std::size_t>(parent)] >= cap) continue;
            if (parent == hub && acc.degree[static_cast<std::size_t>(hub)] >= dmax) continue;
            try_add(parent, v);
        }
        // hub reaches its exact target degree by star attachment
        std::vector<int> targets;
        for (int v = 1; v < n; ++v)
            if (!acc.has(hub, v)) targets.push_back(v);
        rng.shuffle(targets);
        for (int v : targets) {
            if (acc.degree[static_cast<std::size_t>(hub)] >= dmax) break;
            if (acc.degree[static_cast<std::size_t>(v)] >= cap) continue;
            try_add(hub, v);
        }
        if (acc.degree[static_cast<std::size_t>(hub)] != dmax) continue;
        // extra edges while the exact density bound holds
        for (int t = 0; t < 3 * n; ++t) {
            int u = 1 + rng.below(n - 1);
            int v = 1 + rng.below(n - 1);
            if (u == v || acc.degree[static_cast<std::size_t>(u)] >= cap ||
                acc.degree[static_cast<std::size_t>(v)] >= cap)
                continue;
            try_add(u, v);
        }
        Graph g = acc.graph();
        if (g.max_degree() == dmax && mad_below(g, madt)) return g;
    }
    throw GenerationFailure("hub_sparse: retry budget exhausted for n=" + std::to_string(n));
}

}  // namespace detail

/// Deterministic for fixed (spec, seed): identical calls give identical
/// edge sequences.
inline Graph generate(const GeneratorSpec& spec, std::uint64_t seed) {
    using Kind = GeneratorSpec::Kind;
    detail::Rng rng(detail::mix_seed(seed, 0));
    switch (spec.kind) {
        case Kind::path: {
            int n = static_cast<int>(spec.a);
            if (n < 1) throw GenerationFailure("path needs n >= 1");
            std::vector<std::pair<int, int>> e;
            for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
            return Graph::from_edges(n, e);
        }
        case Kind::cycle: {
            int n = static_cast<int>(spec.a);
            if (n < 3) throw GenerationFailure("cycle needs n >= 3");
            std::vector<std::pair<int, int>> e;
            for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
            return Graph::from_edges(n, e);
        }
        case Kind::star: {
            int leaves = static_cast<int>(spec.a);
            if (leaves < 0) throw GenerationFailure("star needs n >= 0");
            std::vector<std::pair<int, int>> e;
            for (int v = 1; v <= leaves; ++v) e.emplace_back(0, v);
            return Graph::from_edges(leaves + 1, e);
        }
        case Kind::complete: {
            int n = static_cast<int>(spec.a);
            if (n < 1) throw GenerationFailure("complete needs n >= 1");
            std::vector<std::pair<int, int>> e;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
            return Graph::from_edges(n, e);
        }
        case Kind::grid:
            return detail::gen_grid(static_cast<int>(spec.a), static_cast<int>(spec.b));
        case Kind::grid_apex:
            return detail::gen_grid_apex(static_cast<int>(spec.a), static_cast<int>(spec.b),
                                         static_cast<int>(spec.c));
        case Kind::hub_sparse:
            return detail::gen_hub_sparse(static_cast<int>(spec.a), static_cast<int>(spec.b),
                                          spec.mad_target, seed);
        case Kind::random_degenerate: {
            int n = static_cast<int>(spec.a), k = static_cast<int>(spec.b);
            if (n < 1 || k < 1) throw GenerationFailure("random_degenerate needs n,k >= 1");
            std::vector<std::pair<int, int>> e;
            for (int v = 1; v < n; ++v) {
                int take = 1 + rng.below(std::min(k, v));
                std::set<int> back;
                while (static_cast<int>(back.size()) < take) back.insert(rng.below(v));
                for (int u : back) e.emplace_back(u, v);
            }
            return Graph::from_edges(n, e);
        }
        case Kind::gnm: {
            int n = static_cast<int>(spec.a);
            long long m = spec.b;
            if (n < 1 || m < 0 || m > static_cast<long long>(n) * (n - 1) / 2)
                throw GenerationFailure("gnm: impossible edge count");
            std::set<std::pair<int, int>> chosen;
            while (static_cast<long long>(chosen.size()) < m) {
                int u = rng.below(n), v = rng.below(n);
                if (u == v) continue;
                chosen.insert({std::min(u, v), std::max(u, v)});
            }
            std::vector<std::pair<int, int>> e(chosen.begin(), chosen.end());
            return Graph::from_edges(n, e);
        }
    }
    throw GenerationFailure("unhandled generator kind");
}

inline Graph generate(std::string_view kind, std::uint64_t seed) {
    return generate(GeneratorSpec::parse(kind), seed);
}

}  // namespace incol
