#pragma once

#include <cmath>
#include <utility>

#include "adas/errors.hpp"

namespace adas {

struct BisectOptions {
    double rel_tol = 1e-12; // on the bracket width, relative to the root scale
    int max_iter = 200;
};

// Bisection on [lo, hi]. Requires a sign change; monotone g is enough for
// the curves this library solves, and bisection cannot be thrown off by
// the near-vertical demand curve close to theta_tau, which defeats
// faster-converging methods.
template <class G>
double bisect(G&& g, double lo, double hi, BisectOptions opt = {}) {
    if (!(lo < hi))
        throw numeric_error("bisection needs lo < hi");
    double glo = g(lo);
    double ghi = g(hi);
    if (glo == 0.0) return lo;
    if (ghi == 0.0) return hi;
    if ((glo < 0.0) == (ghi < 0.0))
        throw numeric_error("bisection bracket does not straddle a sign change");
    for (int it = 0; it < opt.max_iter; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break; // bracket at floating-point resolution
        const double gm = g(mid);
        if (gm == 0.0) return mid;
        if ((gm < 0.0) == (glo < 0.0)) {
            lo = mid;
            glo = gm;
        } else {
            hi = mid;
        }
        if (hi - lo <= opt.rel_tol * std::fmax(std::fabs(lo), std::fabs(hi))) break;
    }
    return 0.5 * (lo + hi);
}

} // namespace adas
