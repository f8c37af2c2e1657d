#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace speclab {

// Simple undirected graph on vertices 0..n-1. Edges live in a packed
// upper-triangular bit set; bit order matches the graph6 wire format
// (column-major: (0,1), (0,2), (1,2), (0,3), ...), so encoding is a
// straight walk over the words. No loops, no multi-edges.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n) {
        if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
        bits_.assign((pair_count(n) + 63) / 64, 0);
    }

    int order() const { return n_; }

    long long size() const {
        long long m = 0;
        for (std::uint64_t w : bits_) m += __builtin_popcountll(w);
        return m;
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) return false;
        const std::size_t idx = pair_index(u, v);
        return (bits_[idx >> 6] >> (idx & 63)) & 1u;
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("Graph: loops are not allowed");
        const std::size_t idx = pair_index(u, v);
        bits_[idx >> 6] |= std::uint64_t{1} << (idx & 63);
    }

    void remove_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) return;
        const std::size_t idx = pair_index(u, v);
        bits_[idx >> 6] &= ~(std::uint64_t{1} << (idx & 63));
    }

    int degree(int v) const {
        check_vertex(v);
        int d = 0;
        for (int u = 0; u < n_; ++u)
            if (u != v && has_edge(u, v)) ++d;
        return d;
    }

    std::vector<int> degrees() const {
        std::vector<int> d(n_, 0);
        for (int j = 1; j < n_; ++j)
            for (int i = 0; i < j; ++i)
                if (has_edge(i, j)) { ++d[i]; ++d[j]; }
        return d;
    }

    int max_degree() const {
        int best = 0;
        for (int d : degrees()) best = best > d ? best : d;
        return best;
    }

    int min_degree() const {
        if (n_ == 0) return 0;
        auto d = degrees();
        int best = d[0];
        for (int x : d) best = best < x ? best : x;
        return best;
    }

    std::vector<int> neighbors(int v) const {
        check_vertex(v);
        std::vector<int> out;
        for (int u = 0; u < n_; ++u)
            if (u != v && has_edge(u, v)) out.push_back(u);
        return out;
    }

    // Row of the adjacency matrix as a bit mask; only valid for n <= 64.
    std::uint64_t row_mask64(int v) const {
        check_vertex(v);
        if (n_ > 64) throw std::invalid_argument("row_mask64: graph order exceeds 64");
        std::uint64_t m = 0;
        for (int u = 0; u < n_; ++u)
            if (u != v && has_edge(u, v)) m |= std::uint64_t{1} << u;
        return m;
    }

    std::vector<std::uint64_t> adjacency_masks() const {
        std::vector<std::uint64_t> rows(n_, 0);
        if (n_ > 64) throw std::invalid_argument("adjacency_masks: graph order exceeds 64");
        for (int j = 1; j < n_; ++j)
            for (int i = 0; i < j; ++i)
                if (has_edge(i, j)) {
                    rows[i] |= std::uint64_t{1} << j;
                    rows[j] |= std::uint64_t{1} << i;
                }
        return rows;
    }

    // Induced subgraph; vertices are relabeled 0..keep.size()-1 in the given order.
    Graph induced(const std::vector<int>& keep) const {
        Graph h(static_cast<int>(keep.size()));
        for (std::size_t a = 0; a < keep.size(); ++a)
            for (std::size_t b = a + 1; b < keep.size(); ++b)
                if (has_edge(keep[a], keep[b])) h.add_edge(static_cast<int>(a), static_cast<int>(b));
        return h;
    }

    // Drops vertex n-1. With the column-major pair layout this is a plain
    // truncation of the bit set.
    Graph without_last_vertex() const {
        if (n_ == 0) throw std::invalid_argument("without_last_vertex: empty graph");
        Graph h(n_ - 1);
        const std::size_t keep_bits = pair_count(n_ - 1);
        for (std::size_t w = 0; w < h.bits_.size(); ++w) h.bits_[w] = bits_[w];
        const std::size_t tail = keep_bits & 63;
        if (!h.bits_.empty() && tail != 0)
            h.bits_.back() &= (std::uint64_t{1} << tail) - 1;
        return h;
    }

    std::vector<std::vector<int>> components() const {
        std::vector<std::vector<int>> comps;
        std::vector<char> seen(n_, 0);
        std::vector<int> queue;
        for (int s = 0; s < n_; ++s) {
            if (seen[s]) continue;
            queue.assign(1, s);
            seen[s] = 1;
            std::vector<int> comp;
            while (!queue.empty()) {
                int v = queue.back();
                queue.pop_back();
                comp.push_back(v);
                for (int u = 0; u < n_; ++u)
                    if (!seen[u] && u != v && has_edge(u, v)) {
                        seen[u] = 1;
                        queue.push_back(u);
                    }
            }
            std::sort(comp.begin(), comp.end());
            comps.push_back(std::move(comp));
        }
        return comps;
    }

    bool is_connected() const { return n_ <= 1 || components().size() == 1; }

    bool operator==(const Graph& other) const = default;

    static std::size_t pair_count(int n) {
        return static_cast<std::size_t>(n) * (n - 1) / 2;
    }

    // Index of the unordered pair {u,v} in column-major upper-triangular order.
    static std::size_t pair_index(int u, int v) {
        if (u > v) std::swap(u, v);
        return static_cast<std::size_t>(v) * (v - 1) / 2 + u;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex " + std::to_string(v) + " out of range");
    }

    int n_ = 0;
    std::vector<std::uint64_t> bits_;
};

inline Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path_graph: need n >= 1");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    g.add_edge(n - 1, 0);
    return g;
}

inline Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete_graph: need n >= 1");
    Graph g(n);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) g.add_edge(i, j);
    return g;
}

// K_{s,t} with side s on vertices 0..s-1 and side t on s..s+t-1.
inline Graph complete_bipartite(int s, int t) {
    if (s < 1 || t < 1) throw std::invalid_argument("complete_bipartite: need s,t >= 1");
    Graph g(s + t);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < t; ++j) g.add_edge(i, s + j);
    return g;
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.order() + b.order());
    for (int j = 1; j < a.order(); ++j)
        for (int i = 0; i < j; ++i)
            if (a.has_edge(i, j)) g.add_edge(i, j);
    const int off = a.order();
    for (int j = 1; j < b.order(); ++j)
        for (int i = 0; i < j; ++i)
            if (b.has_edge(i, j)) g.add_edge(off + i, off + j);
    return g;
}

// Join: disjoint union plus all edges between the two parts.
inline Graph graph_join(const Graph& a, const Graph& b) {
    Graph g = disjoint_union(a, b);
    for (int i = 0; i < a.order(); ++i)
        for (int j = 0; j < b.order(); ++j) g.add_edge(i, a.order() + j);
    return g;
}

// Blow-up: vertex v of the base becomes a stable set of sizes[v] vertices,
// with complete joins between classes of adjacent base vertices. Empty
// classes are allowed (rank-2 graphs are blow-ups of P2 u K1 with the K1
// class empty).
inline Graph blow_up(const Graph& base, const std::vector<int>& sizes) {
    if (static_cast<int>(sizes.size()) != base.order())
        throw std::invalid_argument("blow_up: size vector length must equal base order");
    std::vector<int> offset(sizes.size() + 1, 0);
    for (std::size_t v = 0; v < sizes.size(); ++v) {
        if (sizes[v] < 0) throw std::invalid_argument("blow_up: negative class size");
        offset[v + 1] = offset[v] + sizes[v];
    }
    Graph g(offset.back());
    for (int v = 0; v < base.order(); ++v)
        for (int u = 0; u < v; ++u)
            if (base.has_edge(u, v))
                for (int i = offset[u]; i < offset[u + 1]; ++i)
                    for (int j = offset[v]; j < offset[v + 1]; ++j) g.add_edge(i, j);
    return g;
}

// T-shaped tree: center vertex 0 of degree 3, legs of a, b, c vertices
// (1 <= a <= b <= c); removing the center leaves P_a u P_b u P_c.
inline Graph t_tree(int a, int b, int c) {
    if (a < 1 || a > b || b > c)
        throw std::invalid_argument("t_tree: legs must satisfy 1 <= a <= b <= c");
    Graph g(1 + a + b + c);
    int next = 1;
    for (int leg : {a, b, c}) {
        int prev = 0;
        for (int i = 0; i < leg; ++i) {
            g.add_edge(prev, next);
            prev = next++;
        }
    }
    return g;
}

// R_k(K_{s,t}): complete bipartite graph with the edge uv replaced by a path
// on 2k+1 vertices. Labels: side X = 0..s-1 with u = 0, side Y = s..s+t-1
// with v = s, path interior last (s+t .. s+t+2k-2). The interior-last
// labeling keeps the equitable-partition blocks index-stable.
inline Graph rk_bipartite(int k, int s, int t) {
    if (k < 1) throw std::invalid_argument("rk_bipartite: need k >= 1");
    if (s < 2 || t < 2)
        throw std::invalid_argument("rk_bipartite: need s,t >= 2 (shortest alternative u-v route requires both sides >= 2)");
    Graph g(s + t + 2 * k - 1);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < t; ++j) {
            if (i == 0 && j == 0) continue;  // the replaced edge uv
            g.add_edge(i, s + j);
        }
    int prev = 0;  // u
    for (int i = 0; i < 2 * k - 1; ++i) {
        g.add_edge(prev, s + t + i);
        prev = s + t + i;
    }
    g.add_edge(prev, s);  // ... u_{2k-1} v
    return g;
}

// S_{n,k} = K_k joined to n-k isolated vertices.
inline Graph split_graph(int n, int k) {
    if (k < 1 || n < k) throw std::invalid_argument("split_graph: need 1 <= k <= n");
    Graph clique = complete_graph(k);
    if (n == k) return clique;
    return graph_join(clique, Graph(n - k));
}

}  // namespace speclab
