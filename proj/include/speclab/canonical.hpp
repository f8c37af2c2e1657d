#pragma once

#include <array>
#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "speclab/graph.hpp"
#include "speclab/graph6.hpp"

namespace speclab {

namespace detail {

// Iterated neighborhood refinement. Colors are canonical ordinals: the
// initial color is the degree, and each round replaces a vertex's color by
// the lexicographic rank of (color, sorted neighbor colors). The resulting
// coloring is invariant under relabeling.
inline int refine_colors(int n, const std::uint32_t* adj, std::array<int, 12>& color) {
    for (int v = 0; v < n; ++v) color[v] = __builtin_popcount(adj[v]);
    int ncolors = 0;
    {
        std::array<int, 12> sorted{};
        for (int v = 0; v < n; ++v) sorted[v] = color[v];
        std::sort(sorted.begin(), sorted.begin() + n);
        std::array<int, 12> rank{};
        for (int v = 0; v < n; ++v)
            rank[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.begin() + n, color[v]) - sorted.begin());
        for (int v = 0; v < n; ++v) color[v] = rank[v];
        for (int v = 0; v < n; ++v) ncolors = std::max(ncolors, color[v] + 1);
    }
    using Sig = std::array<int, 13>;  // color followed by sorted neighbor colors
    while (true) {
        std::array<Sig, 12> sig{};
        for (int v = 0; v < n; ++v) {
            Sig s{};
            s.fill(-1);
            s[0] = color[v];
            int cnt = 1;
            std::uint32_t m = adj[v];
            while (m) {
                const int u = __builtin_ctz(m);
                m &= m - 1;
                s[cnt++] = color[u];
            }
            std::sort(s.begin() + 1, s.begin() + cnt);
            sig[v] = s;
        }
        std::array<int, 12> order{};
        for (int v = 0; v < n; ++v) order[v] = v;
        std::sort(order.begin(), order.begin() + n,
                  [&](int a, int b) { return sig[a] < sig[b]; });
        std::array<int, 12> next{};
        int c = 0;
        next[order[0]] = 0;
        for (int i = 1; i < n; ++i) {
            if (sig[order[i]] != sig[order[i - 1]]) ++c;
            next[order[i]] = c;
        }
        if (c + 1 == ncolors) break;
        ncolors = c + 1;
        color = next;
    }
    return ncolors;
}

struct CanonSearch {
    int n = 0;
    const std::uint32_t* adj = nullptr;
    std::array<int, 12> cell_begin{};   // position -> first position of its cell
    std::array<int, 12> cell_end{};
    std::array<int, 12> cell_verts{};   // vertices laid out cell by cell
    std::array<std::uint16_t, 12> best{};
    std::array<int, 12> chosen{};
    std::uint32_t used = 0;

    void run() {
        best.fill(0xFFFF);
        descend(0);
    }

    void descend(int p) {
        if (p == n) return;
        // Candidates: unused vertices of this position's cell, ordered by the
        // column bits they would contribute.
        std::array<std::pair<std::uint16_t, int>, 12> cand{};
        int ncand = 0;
        for (int i = cell_begin[p]; i < cell_end[p]; ++i) {
            const int v = cell_verts[i];
            if (used & (std::uint32_t{1} << v)) continue;
            std::uint16_t col = 0;
            for (int q = 0; q < p; ++q)
                col = static_cast<std::uint16_t>((col << 1) | ((adj[v] >> chosen[q]) & 1u));
            cand[ncand++] = {col, v};
        }
        std::sort(cand.begin(), cand.begin() + ncand);
        std::array<int, 12> tried{};
        int ntried = 0;
        for (int i = 0; i < ncand; ++i) {
            const auto [col, v] = cand[i];
            if (col > best[p]) break;
            bool dup = false;
            for (int j = 0; j < ntried && !dup; ++j) {
                const int u = tried[j];
                // Twins (open or closed) lead to byte-identical completions.
                if ((adj[u] & ~(std::uint32_t{1} << v)) == (adj[v] & ~(std::uint32_t{1} << u)))
                    dup = true;
            }
            if (dup) continue;
            if (col < best[p]) {
                best[p] = col;
                for (int q = p + 1; q < n; ++q) best[q] = 0xFFFF;
            }
            chosen[p] = v;
            used |= std::uint32_t{1} << v;
            descend(p + 1);
            used &= ~(std::uint32_t{1} << v);
            tried[ntried++] = v;
        }
    }
};

}  // namespace detail

// Canonical labeled representative: the relabeling that minimizes the
// adjacency bit string (graph6 bit order), restricted so that refinement
// cells keep their canonical order. Two graphs are isomorphic iff their
// canonical forms are byte-equal. Capped at n <= 12.
inline Graph canonical_graph(const Graph& g) {
    const int n = g.order();
    if (n > 12) throw std::invalid_argument("canonical_graph: order capped at 12");
    if (n <= 1) return g;

    std::uint32_t adj[12] = {};
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (g.has_edge(i, j)) {
                adj[i] |= std::uint32_t{1} << j;
                adj[j] |= std::uint32_t{1} << i;
            }

    std::array<int, 12> color{};
    detail::refine_colors(n, adj, color);

    detail::CanonSearch s;
    s.n = n;
    s.adj = adj;
    {
        std::array<int, 12> order{};
        for (int v = 0; v < n; ++v) order[v] = v;
        std::sort(order.begin(), order.begin() + n, [&](int a, int b) {
            return color[a] != color[b] ? color[a] < color[b] : a < b;
        });
        for (int i = 0; i < n; ++i) s.cell_verts[i] = order[i];
        int begin = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && color[order[i]] != color[order[i - 1]]) begin = i;
            s.cell_begin[i] = begin;
        }
        int end = n;
        for (int i = n - 1; i >= 0; --i) {
            if (i + 1 < n && color[order[i]] != color[order[i + 1]]) end = i + 1;
            s.cell_end[i] = end;
        }
    }
    s.run();

    Graph out(n);
    for (int p = 1; p < n; ++p)
        for (int q = 0; q < p; ++q)
            if ((s.best[p] >> (p - 1 - q)) & 1u) out.add_edge(q, p);
    return out;
}

inline std::string canonical_form(const Graph& g) { return to_graph6(canonical_graph(g)); }

}  // namespace speclab
