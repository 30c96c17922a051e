#pragma once

#include "incol/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace incol {

/// Simple undirected graph over vertex ids 0..n-1. Immutable after
/// construction; loops and duplicate edges are rejected or collapsed at
/// build time. Edge order is first-seen order with endpoints stored as
/// (min, max); adjacency lists are sorted.
class Graph {
public:
    Graph() = default;

    /// Builds from an edge sequence. Duplicates collapse to the first
    /// occurrence; loops throw. n must cover every endpoint.
    static Graph from_edges(int n, std::span<const std::pair<int, int>> pairs) {
        Graph g;
        g.n_ = n;
        g.adj_.assign(static_cast<std::size_t>(n), {});
        for (auto [u, v] : pairs) g.push_edge(u, v);
        g.finish();
        return g;
    }

    static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> pairs) {
        return from_edges(n, std::span<const std::pair<int, int>>(pairs.begin(), pairs.size()));
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::pair<int, int> edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }

    std::span<const int> neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
        return d;
    }

    bool has_edge(int u, int v) const {
        if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) return false;
        const auto& a = adj_[static_cast<std::size_t>(u)];
        return std::binary_search(a.begin(), a.end(), v);
    }

    /// Index into edges() for the pair {u, v}, or -1.
    int edge_id(int u, int v) const {
        if (!has_edge(u, v)) return -1;
        auto it = edge_index_.find(key(std::min(u, v), std::max(u, v)));
        return it == edge_index_.end() ? -1 : it->second;
    }

    /// Number of edges with both endpoints inside the given set.
    long long edges_within(std::span<const int> vertices) const {
        std::vector<char> in(static_cast<std::size_t>(n_), 0);
        for (int v : vertices) in[static_cast<std::size_t>(v)] = 1;
        long long count = 0;
        for (auto [u, v] : edges_)
            if (in[static_cast<std::size_t>(u)] && in[static_cast<std::size_t>(v)]) ++count;
        return count;
    }

    std::string to_edge_list() const {
        std::ostringstream os;
        write_edge_list(os);
        return os.str();
    }

    void write_edge_list(std::ostream& os) const {
        os << "# vertices " << n_ << "\n";
        for (auto [u, v] : edges_) os << u << " " << v << "\n";
    }

private:
    static std::uint64_t key(int u, int v) {
        return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
    }

    void push_edge(int u, int v) {
        if (u == v) throw ParseError("loop edge " + std::to_string(u) + " " + std::to_string(v));
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw ParseError("vertex id out of range: " + std::to_string(std::max(u, v)));
        int a = std::min(u, v), b = std::max(u, v);
        if (edge_index_.count(key(a, b))) return;  // duplicate collapses
        edge_index_[key(a, b)] = static_cast<int>(edges_.size());
        edges_.emplace_back(a, b);
        adj_[static_cast<std::size_t>(a)].push_back(b);
        adj_[static_cast<std::size_t>(b)].push_back(a);
    }

    void finish() {
        for (auto& a : adj_) std::sort(a.begin(), a.end());
    }

    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    std::unordered_map<std::uint64_t, int> edge_index_;
};

/// Parses "u v" lines; '#' starts a comment line. n = 1 + max id, so id
/// gaps become isolated vertices. Duplicate lines collapse; loops are
/// rejected with the offending line number.
inline Graph parse_edge_list(std::istream& in) {
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> loop_lines;
    std::string line;
    int line_no = 0;
    int max_id = -1;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        long long u, v;
        if (!(ls >> u)) continue;  // blank or comment-only line
        if (!(ls >> v)) throw ParseError("expected two vertex ids", line_no);
        std::string rest;
        if (ls >> rest) throw ParseError("trailing token '" + rest + "'", line_no);
        if (u < 0 || v < 0) throw ParseError("negative vertex id", line_no);
        if (u > 1'000'000'000 || v > 1'000'000'000) throw ParseError("vertex id too large", line_no);
        if (u == v) throw ParseError("loop edge " + std::to_string(u) + " " + std::to_string(u), line_no);
        pairs.emplace_back(static_cast<int>(u), static_cast<int>(v));
        max_id = std::max(max_id, static_cast<int>(std::max(u, v)));
    }
    return Graph::from_edges(max_id + 1, pairs);
}

inline Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

/// DIMACS-like ".col" reader: "p edge n m" header, "e u v" lines with
/// 1-based vertex ids, "c" comment lines.
inline Graph parse_dimacs(std::istream& in) {
    std::vector<std::pair<int, int>> pairs;
    std::string line;
    int line_no = 0;
    int n = -1;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag == "c") continue;
        if (tag == "p") {
            std::string fmt;
            long long nn, mm;
            if (!(ls >> fmt >> nn >> mm) || fmt != "edge")
                throw ParseError("bad problem line, expected 'p edge n m'", line_no);
            if (nn < 0) throw ParseError("negative vertex count", line_no);
            n = static_cast<int>(nn);
        } else if (tag == "e") {
            long long u, v;
            if (!(ls >> u >> v)) throw ParseError("bad edge line", line_no);
            if (n < 0) throw ParseError("edge line before problem line", line_no);
            if (u < 1 || v < 1 || u > n || v > n)
                throw ParseError("vertex id outside 1.." + std::to_string(n), line_no);
            if (u == v) throw ParseError("loop edge", line_no);
            pairs.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
        } else {
            throw ParseError("unknown line tag '" + tag + "'", line_no);
        }
    }
    if (n < 0) throw ParseError("missing 'p edge' header");
    return Graph::from_edges(n, pairs);
}

}  // namespace incol
