#pragma once

#include "incol/graph.hpp"

#include <set>
#include <utility>
#include <vector>

namespace incol {

/// A smallest-last elimination order. Every vertex has at most
/// `degeneracy` neighbors later in `order`, and no order does better.
struct DegeneracyOrder {
    std::vector<int> order;
    int degeneracy = 0;
};

/// Smallest-last construction: repeatedly delete a minimum-degree vertex,
/// ties broken by smallest id. The largest degree seen at deletion time is
/// the degeneracy.
inline DegeneracyOrder degeneracy_order(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::set<std::pair<int, int>> queue;  // (degree, vertex)
    for (int v = 0; v < n; ++v) {
        deg[static_cast<std::size_t>(v)] = g.degree(v);
        queue.emplace(deg[static_cast<std::size_t>(v)], v);
    }
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    DegeneracyOrder out;
    out.order.reserve(static_cast<std::size_t>(n));
    while (!queue.empty()) {
        auto [d, v] = *queue.begin();
        queue.erase(queue.begin());
        removed[static_cast<std::size_t>(v)] = 1;
        out.order.push_back(v);
        out.degeneracy = std::max(out.degeneracy, d);
        for (int u : g.neighbors(v)) {
            if (removed[static_cast<std::size_t>(u)]) continue;
            queue.erase({deg[static_cast<std::size_t>(u)], u});
            --deg[static_cast<std::size_t>(u)];
            queue.emplace(deg[static_cast<std::size_t>(u)], u);
        }
    }
    return out;
}

/// Vertices of the (k+1)-core: what survives when vertices of degree <= k
/// are deleted to exhaustion. Nonempty exactly when degeneracy(g) > k.
inline std::vector<int> core_witness(const Graph& g, int k) {
    const int n = g.vertex_count();
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    std::vector<int> stack;
    for (int v = 0; v < n; ++v) {
        deg[static_cast<std::size_t>(v)] = g.degree(v);
        if (deg[static_cast<std::size_t>(v)] <= k) {
            stack.push_back(v);
            removed[static_cast<std::size_t>(v)] = 1;
        }
    }
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : g.neighbors(v)) {
            if (removed[static_cast<std::size_t>(u)]) continue;
            if (--deg[static_cast<std::size_t>(u)] <= k) {
                removed[static_cast<std::size_t>(u)] = 1;
                stack.push_back(u);
            }
        }
    }
    std::vector<int> witness;
    for (int v = 0; v < n; ++v)
        if (!removed[static_cast<std::size_t>(v)]) witness.push_back(v);
    return witness;
}

}  // namespace incol
