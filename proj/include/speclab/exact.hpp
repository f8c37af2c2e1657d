#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <vector>

#include "speclab/graph.hpp"

namespace speclab {

using BigInt = boost::multiprecision::cpp_int;

namespace detail {

inline std::vector<BigInt> adjacency_bigint(const Graph& g) {
    const int n = g.order();
    std::vector<BigInt> a(static_cast<std::size_t>(n) * n, 0);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (g.has_edge(i, j)) {
                a[static_cast<std::size_t>(i) * n + j] = 1;
                a[static_cast<std::size_t>(j) * n + i] = 1;
            }
    return a;
}

inline std::vector<BigInt> mat_mul(const std::vector<BigInt>& x, const std::vector<BigInt>& y, int n) {
    std::vector<BigInt> z(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const BigInt& v = x[static_cast<std::size_t>(i) * n + k];
            if (v == 0) continue;
            for (int j = 0; j < n; ++j)
                z[static_cast<std::size_t>(i) * n + j] += v * y[static_cast<std::size_t>(k) * n + j];
        }
    return z;
}

}  // namespace detail

// Tr(A^t): the number of closed t-walks, in exact integer arithmetic.
inline BigInt closed_walks(const Graph& g, int t) {
    if (t < 1) throw std::invalid_argument("closed_walks: need t >= 1");
    const int n = g.order();
    if (n == 0) return 0;
    if (t == 1) return 0;
    auto a = detail::adjacency_bigint(g);
    auto p = a;
    for (int i = 1; i < t; ++i) p = detail::mat_mul(p, a, n);
    BigInt tr = 0;
    for (int i = 0; i < n; ++i) tr += p[static_cast<std::size_t>(i) * n + i];
    return tr;
}

// Number of t-walks (walks with t vertices): the all-ones bilinear form of
// A^{t-1}. walks(G,1) = n, walks(G,2) = 2m.
inline BigInt walks(const Graph& g, int t) {
    if (t < 1) throw std::invalid_argument("walks: need t >= 1");
    const int n = g.order();
    std::vector<BigInt> v(n, 1);
    for (int step = 1; step < t; ++step) {
        std::vector<BigInt> w(n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j && g.has_edge(i, j)) w[i] += v[j];
        v = std::move(w);
    }
    BigInt total = 0;
    for (const auto& x : v) total += x;
    return total;
}

// Rank of the adjacency matrix over the rationals, by fraction-free
// (Bareiss) elimination in exact integers. Never touches floating point.
inline int rank_exact(const Graph& g) {
    const int n = g.order();
    auto m = detail::adjacency_bigint(g);
    auto at = [&](int i, int j) -> BigInt& { return m[static_cast<std::size_t>(i) * n + j]; };

    int rank = 0;
    BigInt prev_pivot = 1;
    for (int col = 0; col < n && rank < n; ++col) {
        int pivot_row = -1;
        for (int r = rank; r < n; ++r)
            if (at(r, col) != 0) { pivot_row = r; break; }
        if (pivot_row < 0) continue;
        if (pivot_row != rank)
            for (int j = 0; j < n; ++j) std::swap(at(pivot_row, j), at(rank, j));
        const BigInt pivot = at(rank, col);
        for (int r = rank + 1; r < n; ++r) {
            for (int j = col + 1; j < n; ++j)
                at(r, j) = (at(r, j) * pivot - at(r, col) * at(rank, j)) / prev_pivot;
            at(r, col) = 0;
        }
        prev_pivot = pivot;
        ++rank;
    }
    return rank;
}

inline BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

}  // namespace speclab
