#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "speclab/graph.hpp"

namespace speclab {

// Backtracking graph isomorphism with degree pruning. Works at any order
// (no bit-mask cap); intended for the rigid graphs the certifiers compare
// against (R_k families, blow-up bases, split graphs), where degree
// constraints cut the search immediately. For n <= 12 prefer byte-equality
// of canonical forms.
inline bool is_isomorphic(const Graph& a, const Graph& b) {
    const int n = a.order();
    if (n != b.order() || a.size() != b.size()) return false;
    if (n == 0) return true;

    std::vector<int> da = a.degrees(), db = b.degrees();
    {
        auto sa = da, sb = db;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }

    // Map vertices of `a` in an order that keeps the partial image connected
    // where possible: highest degree first, then neighbors of mapped vertices.
    std::vector<int> order;
    order.reserve(n);
    {
        std::vector<char> picked(n, 0);
        auto pick_best = [&](bool require_attached) {
            int best = -1;
            for (int v = 0; v < n; ++v) {
                if (picked[v]) continue;
                if (require_attached) {
                    bool attached = false;
                    for (int u : order)
                        if (a.has_edge(u, v)) { attached = true; break; }
                    if (!attached) continue;
                }
                if (best < 0 || da[v] > da[best]) best = v;
            }
            return best;
        };
        while (static_cast<int>(order.size()) < n) {
            int v = pick_best(true);
            if (v < 0) v = pick_best(false);
            picked[v] = 1;
            order.push_back(v);
        }
    }

    std::vector<int> image(n, -1);
    std::vector<char> used(n, 0);
    auto extend = [&](auto&& self, int depth) -> bool {
        if (depth == n) return true;
        const int v = order[depth];
        for (int w = 0; w < n; ++w) {
            if (used[w] || db[w] != da[v]) continue;
            bool ok = true;
            for (int d = 0; d < depth && ok; ++d)
                if (a.has_edge(v, order[d]) != b.has_edge(w, image[order[d]])) ok = false;
            if (!ok) continue;
            image[v] = w;
            used[w] = 1;
            if (self(self, depth + 1)) return true;
            used[w] = 0;
            image[v] = -1;
        }
        return false;
    };
    return extend(extend, 0);
}

}  // namespace speclab
