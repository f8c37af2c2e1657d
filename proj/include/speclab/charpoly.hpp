#pragma once

#include <algorithm>
#include <stdexcept>

#include "speclab/graph.hpp"

namespace speclab {

// g_n(lambda) = det(lambda*I - A(P_n)) via the three-term recurrence
// g_{n+1} = lambda*g_n - g_{n-1}, with g_0 = 1 and g_1 = lambda (the
// conventions that make g_n the path characteristic polynomial; its roots
// are 2cos(j*pi/(n+1))).
inline double path_charpoly_eval(int n, double lambda) {
    if (n < 0) throw std::invalid_argument("path_charpoly_eval: need n >= 0");
    double prev = 1.0, cur = lambda;
    if (n == 0) return prev;
    for (int i = 1; i < n; ++i) {
        const double next = lambda * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

// f_k(lambda,s,t): characteristic polynomial of the (2k+3)-block equitable
// quotient of R_k(K_{s,t}), expanded in terms of path polynomials:
//   (lambda^2-(s-1)(t-1)) g_{2k+1} - (s+t-2) lambda g_{2k}
//   - 2(s-1)(t-1) + (s-1)(t-1) g_{2k-1}.
// Its largest real root is lambda_1(R_k(K_{s,t})).
inline double rk_quotient_charpoly_eval(int k, int s, int t, double lambda) {
    if (k < 1 || s < 2 || t < 2)
        throw std::invalid_argument("rk_quotient_charpoly_eval: need k >= 1 and s,t >= 2");
    const double a = static_cast<double>(s - 1) * (t - 1);
    return (lambda * lambda - a) * path_charpoly_eval(2 * k + 1, lambda)
         - static_cast<double>(s + t - 2) * lambda * path_charpoly_eval(2 * k, lambda)
         - 2.0 * a
         + a * path_charpoly_eval(2 * k - 1, lambda);
}

// Largest root of f_k by bisection on (2, 1 + max(s,t)]. The bracket is
// valid because lambda_1 > lambda_1(C_{2k+3}) = 2 whenever s+t > 4 while
// every other quotient eigenvalue stays below 2, and f_k is monic. The one
// boundary case is s = t = 2, where R_k(K_{2,2}) is C_{2k+3} itself and the
// radius is exactly 2.
inline double rk_spectral_radius(int k, int s, int t) {
    if (k < 1 || s < 2 || t < 2)
        throw std::invalid_argument("rk_spectral_radius: need k >= 1 and s,t >= 2");
    if (s == 2 && t == 2) return 2.0;
    double lo = 2.0, hi = 1.0 + std::max(s, t);
    const double flo = rk_quotient_charpoly_eval(k, s, t, lo);
    const double fhi = rk_quotient_charpoly_eval(k, s, t, hi);
    if (!(flo < 0.0) || !(fhi > 0.0))
        throw std::runtime_error("rk_spectral_radius: bisection bracket invalid");
    for (int it = 0; it < 200 && hi - lo > 1e-13 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (rk_quotient_charpoly_eval(k, s, t, mid) < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace speclab
