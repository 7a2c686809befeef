#pragma once

#include <cmath>
#include <utility>

#include "iab/errors.hpp"

namespace iab {

struct QuadratureOptions {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_depth = 48;
};

struct QuadratureResult {
    double value;
    double error_estimate;
    long subdivisions;
};

namespace detail {

template <class F>
struct SimpsonWorker {
    F& f;
    int max_depth;
    double error_acc = 0.0;
    long subdivisions = 0;

    // One interval with midpoint Richardson acceptance. fa/fm/fb are reused
    // across levels so each point is evaluated once.
    double refine(double a, double b, double fa, double fm, double fb, double whole, double eps,
                  int depth) {
        const double m = 0.5 * (a + b);
        const double lm = 0.5 * (a + m);
        const double rm = 0.5 * (m + b);
        const double flm = f(lm);
        const double frm = f(rm);
        const double h6 = (b - a) / 12.0;
        const double left = h6 * (fa + 4.0 * flm + fm);
        const double right = h6 * (fm + 4.0 * frm + fb);
        const double delta = left + right - whole;
        if (std::abs(delta) <= 15.0 * eps) {
            error_acc += std::abs(delta) / 15.0;
            return left + right + delta / 15.0;
        }
        if (depth >= max_depth)
            throw ConvergenceError("adaptive quadrature exceeded maximum subdivision depth");
        ++subdivisions;
        return refine(a, m, fa, flm, fm, left, 0.5 * eps, depth + 1) +
               refine(m, b, fm, frm, fb, right, 0.5 * eps, depth + 1);
    }
};

} // namespace detail

/// Adaptive Simpson integration of f over [a, b]. Converges when the local
/// Richardson estimate meets max(abs_tol, rel_tol * |integral|); throws
/// ConvergenceError if the subdivision budget runs out first.
template <class F>
QuadratureResult integrate_adaptive(F&& f, double a, double b, QuadratureOptions opt = {}) {
    if (a == b)
        return QuadratureResult{0.0, 0.0, 0};
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);

    double scale = std::abs(whole);
    for (int pass = 0; pass < 3; ++pass) {
        detail::SimpsonWorker<F> w{f, opt.max_depth};
        const double eps = std::max(opt.abs_tol, opt.rel_tol * scale);
        const double value = w.refine(a, b, fa, fm, fb, whole, eps, 0);
        const double target = std::max(opt.abs_tol, opt.rel_tol * std::abs(value));
        if (w.error_acc <= target || std::abs(value) >= 0.5 * scale)
            return QuadratureResult{value, w.error_acc, w.subdivisions};
        // The integral came out much smaller than the first estimate; tighten
        // the budget to the true scale and integrate again.
        scale = std::abs(value);
    }
    throw ConvergenceError("adaptive quadrature failed to settle on an error scale");
}

} // namespace iab
