#include "iab/testkit/oracle.hpp"

#include <cmath>
#include <random>

#include "iab/errors.hpp"

namespace iab::testkit {

OracleConfig::OracleConfig(long panel_count, double step, std::uint64_t rng_seed)
    : panels(panel_count), fd_step(step), seed(rng_seed) {
    if (panels < 1000)
        throw DomainError("oracle panel count must be at least 1000");
    if (!(fd_step >= 1e-9) || !(fd_step <= 1e-3))
        throw DomainError("oracle finite-difference step must lie in [1e-9, 1e-3]");
}

TrapezoidResult trapezoid_pressure(const ReferenceShell& ref, double r_i, const MaterialParams& m,
                                   long panels) {
    if (panels < 1000)
        throw DomainError("oracle panel count must be at least 1000");
    if (panels % 2 != 0)
        ++panels;
    const double shift = r_i * r_i * r_i - ref.inner * ref.inner * ref.inner;
    const double r_o = shift == 0.0 ? ref.outer
                                    : std::cbrt(ref.outer * ref.outer * ref.outer + shift);
    const double h = (r_o - r_i) / static_cast<double>(panels);

    auto f = [&](double r) {
        const double cube = r * r * r - shift;
        // An unchanged cube means an unchanged radius; skipping the cube root
        // keeps the undeformed state exactly stress free.
        const double R = cube == r * r * r ? r : std::cbrt(cube);
        const StressState s = normal_stresses(R, r, 0.0, m);
        return 2.0 * (s.sigma_tt - s.sigma_rr) / r;
    };

    // Accumulate the full grid and the even-node half grid in one sweep so the
    // Richardson estimate costs nothing extra.
    double sum_full = 0.5 * (f(r_i) + f(r_o));
    double sum_half = 0.5 * (f(r_i) + f(r_o));
    for (long k = 1; k < panels; ++k) {
        const double fk = f(r_i + static_cast<double>(k) * h);
        sum_full += fk;
        if (k % 2 == 0)
            sum_half += fk;
    }
    const double full = h * sum_full;
    const double half = 2.0 * h * sum_half;
    return TrapezoidResult{full, std::abs(full - half) / 3.0, panels};
}

double energy_stress_difference_fd(double hoop_stretch, const MaterialParams& m, double step) {
    if (!(hoop_stretch > 0.0))
        throw DomainError("hoop stretch must be positive");
    if (!(step >= 1e-9) || !(step <= 1e-3))
        throw DomainError("oracle finite-difference step must lie in [1e-9, 1e-3]");

    auto energy = [&](double t) {
        const double t2 = t * t;
        const double t4 = t2 * t2;
        const StretchState s{1.0 / t2, t, t, 1.0 / t4 + 2.0 * t2, t4 + 2.0 / t2};
        return strain_energy(s, m).scaled;
    };
    const double t = hoop_stretch;
    const double dt = t * step;
    const double dw_dt = (energy(t + dt) - energy(t - dt)) / (2.0 * dt);
    return 0.5 * t * dw_dt;
}

double uniform(std::mt19937_64& gen, double lo, double hi) {
    const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    return lo + u * (hi - lo);
}

std::vector<Scenario> random_scenarios(std::uint64_t seed, int count) {
    std::mt19937_64 gen(seed);
    std::vector<Scenario> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        const double inner = uniform(gen, 0.02, 0.035);
        const double wall = uniform(gen, 0.001, 0.005);
        const double stretch = uniform(gen, 0.85, 1.25);
        const double c1 = uniform(gen, 5e3, 5e4);
        const double c2 = uniform(gen, 0.0, 1e5);
        out.push_back(Scenario{
            ReferenceShell(inner, inner + wall),
            inner * stretch,
            MaterialParams(c1, c2),
        });
    }
    return out;
}

std::vector<double> random_hoop_stretches(std::uint64_t seed, int count) {
    std::mt19937_64 gen(seed);
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count));
    while (static_cast<int>(out.size()) < count) {
        const double t = uniform(gen, 0.5, 2.0);
        if (std::abs(t - 1.0) < 0.02)
            continue;
        out.push_back(t);
    }
    return out;
}

} // namespace iab::testkit
