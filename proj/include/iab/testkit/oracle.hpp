#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "iab/constitutive.hpp"
#include "iab/geometry.hpp"

namespace iab::testkit {

/// Uniform draw in [lo, hi) with an explicit bit mapping, so sequences do not
/// depend on the standard library's distribution implementation.
double uniform(std::mt19937_64& gen, double lo, double hi);

/// Knobs for the reference computations. Validated on construction: panels
/// must be at least 1e3 and the finite-difference step inside [1e-9, 1e-3].
struct OracleConfig {
    long panels = 1'000'000;
    double fd_step = 1e-6;
    std::uint64_t seed = 0x1ab5eed;

    OracleConfig() = default;
    OracleConfig(long panel_count, double step, std::uint64_t rng_seed);
};

struct TrapezoidResult {
    double value;
    // Richardson estimate from comparing against the half-resolution grid.
    double error_estimate;
    long panels;
};

/// Internal pressure by brute force: composite trapezoid over the deformed
/// wall of 2 (sigma_tt - sigma_rr) / r, with the stress difference taken from
/// the constitutive stress components rather than the closed-form integrand.
/// Deliberately shares no code with the adaptive solver path.
TrapezoidResult trapezoid_pressure(const ReferenceShell& ref, double r_i, const MaterialParams& m,
                                   long panels);

/// Hoop-minus-radial stress difference recovered by centrally differencing the
/// strain energy along the volume-preserving family lambda_theta = t,
/// lambda_r = t^-2: sigma_tt - sigma_rr = (t/2) dW/dt. `step` is relative.
double energy_stress_difference_fd(double hoop_stretch, const MaterialParams& m, double step);

/// One randomly drawn solvable configuration.
struct Scenario {
    ReferenceShell shell;
    double r_i;
    MaterialParams material;
};

/// Deterministic scenario batch: inner radius 2-3.5 cm, wall 1-5 mm, inner
/// stretch 0.85-1.25, C1 in [5e3, 5e4] Pa, C2 in [0, 1e5] Pa. Same seed,
/// same list, on every platform.
std::vector<Scenario> random_scenarios(std::uint64_t seed, int count);

/// Deterministic hoop stretches in [0.5, 2], excluding a +-0.02 band around 1
/// where the reference stress difference vanishes.
std::vector<double> random_hoop_stretches(std::uint64_t seed, int count);

} // namespace iab::testkit
