#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "speclab/graph.hpp"

namespace speclab {

// Odd girth of a graph: length of a shortest odd cycle, or the bipartite
// marker (empty optional).
struct OddGirth {
    std::optional<int> length;

    bool bipartite() const { return !length.has_value(); }
    bool operator==(const OddGirth&) const = default;
};

// Shortest odd closed walk through BFS layering: an edge joining two
// vertices in the same BFS layer of root r witnesses an odd closed walk of
// length dist(r,u)+dist(r,v)+1, and the minimum of that quantity over all
// roots and same-layer edges is the odd girth.
inline OddGirth odd_girth(const Graph& g) {
    const int n = g.order();
    int best = -1;
    std::vector<int> dist(n), queue(n);
    for (int r = 0; r < n; ++r) {
        std::fill(dist.begin(), dist.end(), -1);
        int head = 0, tail = 0;
        queue[tail++] = r;
        dist[r] = 0;
        while (head < tail) {
            const int v = queue[head++];
            for (int u = 0; u < n; ++u) {
                if (u == v || !g.has_edge(u, v)) continue;
                if (dist[u] < 0) {
                    dist[u] = dist[v] + 1;
                    queue[tail++] = u;
                } else if (dist[u] == dist[v]) {
                    const int walk = dist[u] + dist[v] + 1;
                    if (best < 0 || walk < best) best = walk;
                }
            }
        }
    }
    if (best < 0) return {};
    return {best};
}

// True iff G contains no C_3, C_5, ..., C_{2k+1}: bipartite or odd girth
// at least 2k+3.
inline bool is_forbidden_free(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("is_forbidden_free: need k >= 1");
    const OddGirth og = odd_girth(g);
    return og.bipartite() || *og.length >= 2 * k + 3;
}

namespace detail {

// Lexicographically smallest closed vertex sequence of length `len` starting
// at `start`, as a simple cycle, or empty if none exists. Prunes with BFS
// distances back to the start.
inline std::vector<int> lex_min_cycle_through(const Graph& g, int start, int len) {
    const int n = g.order();
    std::vector<int> dist(n, -1), queue(n);
    int head = 0, tail = 0;
    queue[tail++] = start;
    dist[start] = 0;
    while (head < tail) {
        const int v = queue[head++];
        for (int u = 0; u < n; ++u)
            if (u != v && g.has_edge(u, v) && dist[u] < 0) {
                dist[u] = dist[v] + 1;
                queue[tail++] = u;
            }
    }
    std::vector<int> path{start};
    std::vector<char> used(n, 0);
    used[start] = 1;
    auto dfs = [&](auto&& self) -> bool {
        const int depth = static_cast<int>(path.size());
        if (depth == len)
            return g.has_edge(path.back(), start);
        for (int u = 0; u < n; ++u) {
            if (used[u] || !g.has_edge(path.back(), u)) continue;
            if (dist[u] < 0 || dist[u] > len - depth) continue;  // cannot close in time
            path.push_back(u);
            used[u] = 1;
            if (self(self)) return true;
            used[u] = 0;
            path.pop_back();
        }
        return false;
    };
    if (!dfs(dfs)) return {};
    return path;
}

}  // namespace detail

// A shortest odd cycle as a vertex sequence, or nothing for bipartite
// graphs. Deterministic tie-break: lowest start vertex, then the
// lexicographically smallest sequence. Any shortest odd cycle is induced
// (a chord would close a shorter odd cycle); callers may assert that.
inline std::optional<std::vector<int>> shortest_odd_cycle(const Graph& g) {
    const OddGirth og = odd_girth(g);
    if (og.bipartite()) return std::nullopt;
    const int len = *og.length;
    for (int start = 0; start < g.order(); ++start) {
        auto cyc = detail::lex_min_cycle_through(g, start, len);
        if (!cyc.empty()) return cyc;
    }
    return std::nullopt;  // unreachable: odd girth was finite
}

// Subgraph cycle search: does G contain a (not necessarily induced) cycle
// with exactly `len` vertices?
inline bool has_cycle_of_length(const Graph& g, int len) {
    if (len < 3 || len > g.order()) return false;
    const int n = g.order();
    std::vector<int> path;
    std::vector<char> used(n, 0);
    auto dfs = [&](auto&& self, int start) -> bool {
        const int depth = static_cast<int>(path.size());
        if (depth == len) return g.has_edge(path.back(), start);
        for (int u = start + 1; u < n; ++u) {  // cycles rooted at their minimum vertex
            if (used[u] || !g.has_edge(path.back(), u)) continue;
            path.push_back(u);
            used[u] = 1;
            if (self(self, start)) return true;
            used[u] = 0;
            path.pop_back();
        }
        return false;
    };
    for (int start = 0; start < n; ++start) {
        path.assign(1, start);
        std::fill(used.begin(), used.end(), 0);
        used[start] = 1;
        if (dfs(dfs, start)) return true;
    }
    return false;
}

}  // namespace speclab
