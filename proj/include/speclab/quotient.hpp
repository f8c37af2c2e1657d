#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "speclab/graph.hpp"

namespace speclab {

struct NotAPartitionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotEquitableError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Ordered vertex blocks together with the induced quotient matrix. Only
// produced for equitable partitions, so quotient(i,j) is the exact number of
// neighbors every vertex of block i has in block j.
struct EquitablePartition {
    std::vector<std::vector<int>> blocks;
    Eigen::MatrixXd quotient;
};

// Verifies that `blocks` is a partition of V(G) and that it is equitable,
// then returns the quotient. Non-partitions and non-equitable partitions are
// rejected with distinct error kinds.
inline EquitablePartition quotient_matrix(const Graph& g, const std::vector<std::vector<int>>& blocks) {
    const int n = g.order();
    std::vector<int> owner(n, -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) throw NotAPartitionError("quotient_matrix: empty block");
        for (int v : blocks[b]) {
            if (v < 0 || v >= n) throw NotAPartitionError("quotient_matrix: vertex out of range");
            if (owner[v] != -1) throw NotAPartitionError("quotient_matrix: vertex appears in two blocks");
            owner[v] = static_cast<int>(b);
        }
    }
    for (int v = 0; v < n; ++v)
        if (owner[v] == -1) throw NotAPartitionError("quotient_matrix: vertex missing from all blocks");

    const int t = static_cast<int>(blocks.size());
    Eigen::MatrixXd q = Eigen::MatrixXd::Zero(t, t);
    for (int bi = 0; bi < t; ++bi) {
        std::vector<int> first_count(t, -1);
        for (std::size_t pos = 0; pos < blocks[bi].size(); ++pos) {
            const int v = blocks[bi][pos];
            std::vector<int> count(t, 0);
            for (int u = 0; u < n; ++u)
                if (u != v && g.has_edge(u, v)) ++count[owner[u]];
            if (pos == 0) {
                first_count = count;
            } else if (count != first_count) {
                throw NotEquitableError("quotient_matrix: block " + std::to_string(bi) +
                                        " has non-constant neighbor counts");
            }
        }
        for (int bj = 0; bj < t; ++bj) q(bi, bj) = first_count[bj];
    }
    return {blocks, q};
}

// Eigenvalues of the quotient. The quotient of an equitable partition is
// diagonally similar to a symmetric matrix (scale by sqrt of block sizes),
// so its spectrum is real and safe to compute with the self-adjoint solver.
inline std::vector<double> quotient_eigenvalues(const EquitablePartition& p) {
    const int t = static_cast<int>(p.blocks.size());
    Eigen::MatrixXd b(t, t);
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j) {
            const double ni = static_cast<double>(p.blocks[i].size());
            const double nj = static_cast<double>(p.blocks[j].size());
            b(i, j) = p.quotient(i, j) * std::sqrt(ni / nj);
        }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.compute(0.5 * (b + b.transpose()), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("quotient_eigenvalues: eigensolver did not converge");
    std::vector<double> ev(solver.eigenvalues().data(), solver.eigenvalues().data() + t);
    std::sort(ev.begin(), ev.end(), std::greater<double>());
    return ev;
}

inline double largest_quotient_eigenvalue(const EquitablePartition& p) {
    auto ev = quotient_eigenvalues(p);
    if (ev.empty()) throw std::invalid_argument("largest_quotient_eigenvalue: empty partition");
    return ev.front();
}

// The equitable (2k+3)-block partition of R_k(K_{s,t}):
// X\{u}, Y\{v}, {u}, {u_1}, ..., {u_{2k-1}}, {v}, matching the labeling
// produced by rk_bipartite(). Its quotient's largest eigenvalue is the
// spectral radius of the graph.
inline std::vector<std::vector<int>> rk_partition(int k, int s, int t) {
    if (k < 1 || s < 2 || t < 2)
        throw std::invalid_argument("rk_partition: need k >= 1 and s,t >= 2");
    std::vector<std::vector<int>> blocks;
    std::vector<int> xs, ys;
    for (int i = 1; i < s; ++i) xs.push_back(i);
    for (int j = 1; j < t; ++j) ys.push_back(s + j);
    blocks.push_back(xs);
    blocks.push_back(ys);
    blocks.push_back({0});
    for (int i = 0; i < 2 * k - 1; ++i) blocks.push_back({s + t + i});
    blocks.push_back({s});
    return blocks;
}

}  // namespace speclab
