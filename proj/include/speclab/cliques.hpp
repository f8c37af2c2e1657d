#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "speclab/graph.hpp"

namespace speclab {

namespace detail {

// Branch and bound for the maximum clique, with a greedy-coloring bound
// (vertices grouped into independent classes; a clique takes at most one
// vertex per class). Candidate sets live in 64-bit masks.
struct CliqueSolver {
    const std::vector<std::uint64_t>& adj;
    int best = 0;

    void expand(std::uint64_t cand, int depth) {
        if (cand == 0) {
            best = std::max(best, depth);
            return;
        }
        std::vector<int> order;
        std::vector<int> bound;
        int color = 0;
        std::uint64_t left = cand;
        while (left) {
            ++color;
            std::uint64_t avail = left;
            while (avail) {
                const int v = __builtin_ctzll(avail);
                const std::uint64_t bit = std::uint64_t{1} << v;
                avail &= ~adj[v];
                avail &= ~bit;
                left &= ~bit;
                order.push_back(v);
                bound.push_back(color);
            }
        }
        std::uint64_t pool = cand;
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (depth + bound[i] <= best) return;
            const int v = order[i];
            pool &= ~(std::uint64_t{1} << v);
            expand(pool & adj[v], depth + 1);
        }
    }
};

}  // namespace detail

// Exact clique number. Practical to n <= 64 (adjacency rows fit in one
// machine word each).
inline int clique_number(const Graph& g) {
    const int n = g.order();
    if (n == 0) return 0;
    if (n > 64) throw std::invalid_argument("clique_number: order capped at 64");
    const auto adj = g.adjacency_masks();
    detail::CliqueSolver solver{adj};
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    solver.expand(all, 0);
    return solver.best;
}

}  // namespace speclab
