#include "iab/solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "iab/kernels.hpp"
#include "iab/root_find.hpp"

namespace iab {

namespace {

double cube(double x) {
    return x * x * x;
}

// Equilibrium right-hand side 2 (sigma_tt - sigma_rr) / r in the factored
// form 2 (r^6 - R^6) (C1 / (R^2 r^5) + C2 / (R^4 r^3)), algebraically equal
// to the expanded Mooney-Rivlin expression but exactly zero for an identity
// deformation, so undisplaced shells integrate to a pressure of exactly 0.
double integrand_at(double R, double r, const MaterialParams& m) {
    const auto sixth = [](double x) {
        const double x3 = x * x * x;
        return x3 * x3;
    };
    const double R2 = R * R;
    const double r2 = r * r;
    const double R4 = R2 * R2;
    const double r3 = r2 * r;
    const double r5 = r2 * r3;
    const double diff6 = sixth(r) - sixth(R);
    return 2.0 * diff6 * (m.c1 / (R2 * r5) + m.c2 / (R4 * r3));
}

} // namespace

double pressure_integrand_r(double r, const ReferenceShell& ref, double r_i,
                            const MaterialParams& m) {
    const double R = reference_radius(r, ref, r_i);
    return integrand_at(R, r, m);
}

double pressure_integrand_R(double R, const ReferenceShell& ref, double r_i,
                            const MaterialParams& m) {
    const double r = map_radius(R, ref, r_i);
    const double R2 = R * R;
    const double r2 = r * r;
    // dr/dR = R^2/r^2 pulls the deformed-coordinate integrand back to R.
    return integrand_at(R, r, m) * (R2 / r2);
}

namespace {

// Pressure integral in the deformed coordinate for a candidate inner radius.
QuadratureResult pressure_integral(const ReferenceShell& ref, double r_i, const MaterialParams& m,
                                   const SolveOptions& opt) {
    const double r_o = map_radius(ref.outer, ref, r_i);
    auto f = [&](double r) { return pressure_integrand_r(r, ref, r_i, m); };
    return integrate_adaptive(f, r_i, r_o, opt.quad);
}

std::vector<ProfileSample> build_profile(const ReferenceShell& ref, double r_i,
                                         const MaterialParams& m, double pressure, int samples,
                                         const SolveOptions& opt) {
    if (samples < 2)
        throw DomainError("stress profile needs at least 2 samples");
    const std::size_t n = static_cast<std::size_t>(samples);
    std::vector<double> R(n), r(n), dev(n);
    const double dR = ref.thickness() / static_cast<double>(samples - 1);
    for (std::size_t j = 0; j < n; ++j)
        R[j] = (j + 1 == n) ? ref.outer : ref.inner + static_cast<double>(j) * dR;

    const double shift = cube(r_i) - cube(ref.inner);
    kernels::map_radius(R.data(), r.data(), n, shift);
    r.front() = r_i;
    r.back() = map_radius(ref.outer, ref, r_i);
    kernels::radial_deviatoric(R.data(), r.data(), dev.data(), n, m.c1, m.c2);

    std::vector<ProfileSample> profile(n);
    auto f = [&](double s) { return pressure_integrand_r(s, ref, r_i, m); };
    for (std::size_t j = 0; j < n; ++j) {
        double sigma;
        if (j == 0)
            sigma = -opt.bc.atmospheric - pressure;
        else if (j + 1 == n)
            sigma = -opt.bc.atmospheric;
        else
            sigma = -opt.bc.atmospheric - integrate_adaptive(f, r[j], r.back(), opt.quad).value;
        profile[j] = ProfileSample{R[j], r[j], sigma, dev[j] - sigma};
    }
    return profile;
}

} // namespace

SolveReport internal_pressure(const ReferenceShell& ref, double r_i, const MaterialParams& m,
                              const SolveOptions& opt) {
    const DeformedShell def = deform(ref, r_i);
    const QuadratureResult integral = pressure_integral(ref, r_i, m, opt);
    const double pressure = integral.value;
    return SolveReport{
        pressure,
        def,
        build_profile(ref, r_i, m, pressure, opt.profile_samples, opt),
        wall_volume(def) - wall_volume(ref),
        integral.error_estimate / std::max(1.0, std::abs(pressure)),
        integral.subdivisions,
    };
}

std::vector<ProfileSample> radial_stress_profile(const ReferenceShell& ref, double r_i,
                                                 const MaterialParams& m, int samples,
                                                 const SolveOptions& opt) {
    const double pressure = pressure_integral(ref, r_i, m, opt).value;
    return build_profile(ref, r_i, m, pressure, samples, opt);
}

ForwardResult forward_solve(const ReferenceShell& ref, double target_pressure,
                            const MaterialParams& m, const SolveOptions& opt) {
    const double lo = std::max(opt.bracket_lo * ref.inner, kCollapseGuard);
    const double hi = opt.bracket_hi * ref.inner;
    const int n = std::max(opt.scan_points, 3);

    auto mismatch = [&](double x) { return pressure_integral(ref, x, m, opt).value - target_pressure; };

    // Scan the whole bracket: pressure need not be monotone in the inner
    // radius (limit-point instability), so every sign change is a candidate.
    std::vector<double> x(static_cast<std::size_t>(n)), g(static_cast<std::size_t>(n));
    const double dx = (hi - lo) / static_cast<double>(n - 1);
    bool monotone = true;
    for (int k = 0; k < n; ++k) {
        x[k] = (k + 1 == n) ? hi : lo + k * dx;
        g[k] = mismatch(x[k]);
        if (k > 0 && g[k] <= g[k - 1])
            monotone = false;
    }

    std::vector<double> roots;
    long iterations = 0;
    for (int k = 0; k < n; ++k) {
        if (g[k] == 0.0)
            roots.push_back(x[k]);
    }
    for (int k = 0; k + 1 < n; ++k) {
        if (g[k] == 0.0 || g[k + 1] == 0.0 || (g[k] > 0.0) == (g[k + 1] > 0.0))
            continue;
        RootOptions ro;
        ro.f_tol = std::abs(target_pressure) * 1e-9 + 1e-12;
        ro.max_iter = opt.max_root_iter;
        const RootResult root = find_root_brent(mismatch, x[k], x[k + 1], g[k], g[k + 1], ro);
        iterations += root.iterations;
        if (!root.converged) {
            std::ostringstream msg;
            msg << "forward solve did not converge within " << opt.max_root_iter
                << " iterations near r_i=" << root.x;
            throw ConvergenceError(msg.str());
        }
        roots.push_back(root.x);
    }

    std::sort(roots.begin(), roots.end());
    if (roots.empty()) {
        const auto [gmin, gmax] = std::minmax_element(g.begin(), g.end());
        std::ostringstream msg;
        msg << "target pressure " << target_pressure << " Pa outside the achievable range ["
            << *gmin + target_pressure << ", " << *gmax + target_pressure
            << "] Pa for inner radii in [" << lo << ", " << hi << "] m";
        throw BracketError(msg.str());
    }

    std::optional<LimitPointWarning> warning;
    if (!monotone || roots.size() > 1)
        warning = LimitPointWarning{monotone, roots};

    return ForwardResult{
        internal_pressure(ref, roots.front(), m, opt),
        target_pressure,
        iterations,
        warning,
    };
}

double equilibrium_residual(const ReferenceShell& ref, double r_i, const MaterialParams& m,
                            int grid_points, const SolveOptions& opt) {
    if (grid_points < 3)
        throw DomainError("equilibrium residual needs at least 3 grid points");
    const DeformedShell def = deform(ref, r_i);
    const std::size_t n = static_cast<std::size_t>(grid_points);
    const double h = def.thickness() / static_cast<double>(grid_points - 1);

    // Tight per-point tolerances keep quadrature noise far below the O(h^2)
    // finite-difference truncation this function is meant to expose.
    QuadratureOptions tight = opt.quad;
    tight.rel_tol = std::min(tight.rel_tol, 1e-12);

    std::vector<double> r(n), sigma(n);
    for (std::size_t j = 0; j < n; ++j)
        r[j] = (j + 1 == n) ? def.outer : def.inner + static_cast<double>(j) * h;
    auto f = [&](double s) { return pressure_integrand_r(s, ref, r_i, m); };
    for (std::size_t j = 0; j < n; ++j)
        sigma[j] = (j + 1 == n)
                       ? -opt.bc.atmospheric
                       : -opt.bc.atmospheric - integrate_adaptive(f, r[j], def.outer, tight).value;

    double worst = 0.0;
    for (std::size_t j = 1; j + 1 < n; ++j) {
        const double slope = (sigma[j + 1] - sigma[j - 1]) / (2.0 * h);
        const double rhs = integrand_at(reference_radius(r[j], ref, r_i), r[j], m);
        worst = std::max(worst, std::abs(slope - rhs));
    }
    return worst;
}

} // namespace iab
