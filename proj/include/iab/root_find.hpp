#pragma once

#include <cmath>
#include <limits>

#include "iab/errors.hpp"

namespace iab {

struct RootOptions {
    double x_tol = 0.0; // absolute width target on top of the ulp-level floor
    double f_tol = 0.0; // accept |f| at or below this
    int max_iter = 100;
};

struct RootResult {
    double x;
    double fx;
    long iterations;
    bool converged;
};

/// Brent's method on [a, b] with fa = f(a), fb = f(b) already evaluated.
/// Requires a sign change across the bracket. Combines inverse quadratic
/// interpolation, secant steps, and bisection; never leaves the bracket.
template <class F>
RootResult find_root_brent(F&& f, double a, double b, double fa, double fb, RootOptions opt = {}) {
    if ((fa > 0.0) == (fb > 0.0) && fa != 0.0 && fb != 0.0)
        throw BracketError("root bracket endpoints have the same sign");
    double c = a, fc = fa;
    double d = b - a, e = d;
    constexpr double eps = std::numeric_limits<double>::epsilon();

    for (long iter = 1; iter <= opt.max_iter; ++iter) {
        if ((fb > 0.0) == (fc > 0.0) && fc != 0.0) {
            c = a;
            fc = fa;
            d = e = b - a;
        }
        if (std::abs(fc) < std::abs(fb)) {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        const double tol1 = 2.0 * eps * std::abs(b) + 0.5 * opt.x_tol;
        const double xm = 0.5 * (c - b);
        if (std::abs(xm) <= tol1 || fb == 0.0 || std::abs(fb) <= opt.f_tol)
            return RootResult{b, fb, iter, true};

        if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
            double p, q;
            const double s = fb / fa;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                const double qq = fa / fc;
                const double r = fb / fc;
                p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0)
                q = -q;
            p = std::abs(p);
            if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += (std::abs(d) > tol1) ? d : (xm > 0.0 ? tol1 : -tol1);
        fb = f(b);
    }
    return RootResult{b, fb, opt.max_iter, false};
}

} // namespace iab
