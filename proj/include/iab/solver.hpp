#pragma once

#include <optional>
#include <vector>

#include "iab/constitutive.hpp"
#include "iab/geometry.hpp"
#include "iab/quadrature.hpp"

namespace iab {

/// Ambient pressure on the outer face, in Pa gauge-zero convention:
/// sigma_rr(r_o) = -atmospheric. Internal pressure results are always gauge.
struct BoundaryConditions {
    double atmospheric = 0.0;
};

struct SolveOptions {
    QuadratureOptions quad{};
    BoundaryConditions bc{};
    int profile_samples = 128;
    // Forward-solve bracket on the deformed inner radius, as fractions of the
    // reference inner radius, plus the scan density used to locate roots and
    // check monotonicity.
    double bracket_lo = 0.1;
    double bracket_hi = 2.0;
    int scan_points = 65;
    int max_root_iter = 100;
};

struct ProfileSample {
    double R;
    double r;
    double sigma_rr;
    double hydrostatic_p;
};

struct SolveReport {
    double pressure;
    DeformedShell deformed;
    std::vector<ProfileSample> profile;
    double delta_wall_volume;
    // Integration error of the pressure integral relative to max(1 Pa, |P|).
    double quadrature_error_estimate;
    long iterations;
};

/// Pressure on the falling side of a limit-point instability is not a
/// one-to-one function of geometry; when the bracket scan sees it, the result
/// carries every root found and the requested branch.
struct LimitPointWarning {
    bool monotone;
    std::vector<double> candidate_roots;
};

struct ForwardResult {
    SolveReport report;
    double target_pressure;
    long root_iterations;
    std::optional<LimitPointWarning> warning;
};

/// Radial-equilibrium integrand in the deformed coordinate:
/// d(sigma_rr)/dr = 2 (sigma_tt - sigma_rr) / r evaluated at radius r.
double pressure_integrand_r(double r, const ReferenceShell& ref, double r_i,
                            const MaterialParams& m);

/// Same integrand pulled back to the reference coordinate R (dr = R^2/r^2 dR).
double pressure_integrand_R(double R, const ReferenceShell& ref, double r_i,
                            const MaterialParams& m);

/// Inverse problem: internal gauge pressure (and full stress profile) required
/// to hold the inner surface at r_i.
SolveReport internal_pressure(const ReferenceShell& ref, double r_i, const MaterialParams& m,
                              const SolveOptions& opt = {});

/// Radial stress and hydrostatic pressure sampled at `samples` stations
/// uniform in the reference radius. Endpoints satisfy the boundary conditions
/// exactly; interior stations integrate from the outer face inward.
std::vector<ProfileSample> radial_stress_profile(const ReferenceShell& ref, double r_i,
                                                 const MaterialParams& m, int samples,
                                                 const SolveOptions& opt = {});

/// Forward problem: deformed geometry produced by a target gauge pressure.
/// Scans the bracket for every crossing, solves each with Brent, and returns
/// the smallest-radius root (the rising loading branch).
ForwardResult forward_solve(const ReferenceShell& ref, double target_pressure,
                            const MaterialParams& m, const SolveOptions& opt = {});

/// Max abs residual of the radial momentum balance over an n-point uniform
/// grid in r, using central differences of the integrated sigma_rr profile
/// against the analytic right-hand side. Second order in the grid spacing.
double equilibrium_residual(const ReferenceShell& ref, double r_i, const MaterialParams& m,
                            int grid_points, const SolveOptions& opt = {});

} // namespace iab
