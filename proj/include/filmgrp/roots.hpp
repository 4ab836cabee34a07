#pragma once

#include <cmath>
#include <limits>
#include <string>

#include "filmgrp/errors.hpp"

namespace filmgrp::roots {

/// Value, derivative and magnitude of the largest term, used to scale
/// the residual tolerance.
struct Eval {
    double h;
    double dh;
    double scale;
};

/// Safeguarded Newton for an increasing function on [lo, hi] with
/// h(lo) < 0 < h(hi). A Newton iterate that leaves the bracket is replaced
/// by the midpoint. Converged once |h| <= rtol * max(1, scale).
template <class F>
double newton_bisect(F&& fn, double lo, double hi, double x0, double rtol = 1e-13,
                     int max_iter = 200) {
    double x = x0;
    for (int it = 0; it < max_iter; ++it) {
        const Eval e = fn(x);
        const double tol = rtol * std::fmax(1.0, e.scale);
        if (std::abs(e.h) <= tol) return x;
        if (e.h < 0.0) lo = x; else hi = x;
        double xn = x - e.h / e.dh;
        if (!(e.dh > 0.0) || !(xn > lo && xn < hi)) xn = 0.5 * (lo + hi);
        if (xn == x || hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(x)) {
            const Eval en = fn(xn);
            if (std::abs(en.h) <= 16.0 * tol) return xn;
            break;
        }
        x = xn;
    }
    throw NoRoot("scalar root not resolved near x = " + std::to_string(x));
}

}  // namespace filmgrp::roots
