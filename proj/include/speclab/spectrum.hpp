#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "speclab/graph.hpp"

namespace speclab {

// Default tolerance for classifying eigenvalues as positive/zero/negative.
// Adjacency spectra at the orders handled here are computed to ~1e-10, which
// leaves two orders of margin.
inline constexpr double kDefaultZeroTol = 1e-7;

// Adjacency eigenvalues in non-increasing order.
struct Spectrum {
    std::vector<double> values;
    double zero_tol = kDefaultZeroTol;

    double lambda(int i) const { return values.at(static_cast<std::size_t>(i) - 1); }
    double lambda1() const { return values.empty() ? 0.0 : values.front(); }
    double lambda2() const { return values.size() < 2 ? 0.0 : values[1]; }
};

inline Eigen::MatrixXd adjacency_matrix(const Graph& g) {
    const int n = g.order();
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (g.has_edge(i, j)) a(i, j) = a(j, i) = 1.0;
    return a;
}

// Eigenvalues of the symmetric adjacency matrix (orthogonal-similarity
// method: tridiagonalization + implicit-shift QL, as provided by Eigen's
// self-adjoint solver). Non-convergence is reported, never swallowed.
inline Spectrum spectrum(const Graph& g, double zero_tol = kDefaultZeroTol) {
    if (g.order() < 1) throw std::invalid_argument("spectrum: need at least one vertex");
    if (zero_tol < 0) throw std::invalid_argument("spectrum: negative zero tolerance");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.compute(adjacency_matrix(g), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("spectrum: eigensolver did not converge within its sweep cap");
    Spectrum s;
    s.zero_tol = zero_tol;
    const auto& ev = solver.eigenvalues();
    s.values.assign(ev.data(), ev.data() + ev.size());
    std::sort(s.values.begin(), s.values.end(), std::greater<double>());
    return s;
}

inline double lambda1(const Graph& g) { return g.order() == 0 ? 0.0 : spectrum(g).lambda1(); }

// Sums of 2k-th powers of the positive / negative eigenvalues, classified
// with the spectrum's zero tolerance. power = 2 gives the classical
// s^+ / s^- pair.
struct InertiaSums {
    double s_plus = 0.0;
    double s_minus = 0.0;
    int p_plus = 0;
    int p_minus = 0;
};

inline InertiaSums inertia_sums(const Spectrum& s, int power) {
    if (power < 2 || power % 2 != 0)
        throw std::invalid_argument("inertia_sums: power must be a positive even integer");
    InertiaSums r;
    for (double v : s.values) {
        if (v > s.zero_tol) {
            r.s_plus += std::pow(v, power);
            ++r.p_plus;
        } else if (v < -s.zero_tol) {
            r.s_minus += std::pow(v, power);
            ++r.p_minus;
        }
    }
    return r;
}

// Prefix-sum dominance test for non-negative non-increasing vectors
// (callers pad with zeros to equal length).
inline bool weakly_majorizes(const std::vector<double>& r, const std::vector<double>& s) {
    if (r.size() != s.size())
        throw std::invalid_argument("weakly_majorizes: vectors must have equal length (pad with zeros)");
    auto check = [](const std::vector<double>& v, const char* name) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] < 0) throw std::invalid_argument(std::string("weakly_majorizes: negative entry in ") + name);
            if (i > 0 && v[i] > v[i - 1])
                throw std::invalid_argument(std::string("weakly_majorizes: ") + name + " is not non-increasing");
        }
    };
    check(r, "r");
    check(s, "s");
    double pr = 0, ps = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        pr += r[i];
        ps += s[i];
        if (ps > pr) return false;
    }
    return true;
}

inline double p_norm(const std::vector<double>& v, double p) {
    if (p < 1) throw std::invalid_argument("p_norm: need p >= 1");
    double acc = 0;
    for (double x : v) acc += std::pow(std::abs(x), p);
    return std::pow(acc, 1.0 / p);
}

}  // namespace speclab
