#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "iab/constitutive.hpp"
#include "iab/testkit/oracle.hpp"

using namespace iab;

namespace {

double uniform(std::mt19937_64& gen, double lo, double hi) {
    return lo + (static_cast<double>(gen() >> 11) * 0x1.0p-53) * (hi - lo);
}

} // namespace

TEST_CASE("strain energy vanishes in the reference state") {
    const StretchState rest = stretches(0.03, 0.03);
    const StrainEnergy w = strain_energy(rest, MaterialParams(1.1e4, 2.2e4));
    CHECK(std::abs(w.scaled) < 1e-10);
    CHECK(std::abs(w.unscaled) < 1e-10);
}

TEST_CASE("scaled energy is half the unscaled convention") {
    std::mt19937_64 gen(7);
    for (int trial = 0; trial < 100; ++trial) {
        const StretchState s = stretches(uniform(gen, 0.02, 0.04), uniform(gen, 0.02, 0.04));
        const MaterialParams m(uniform(gen, 5e3, 5e4), uniform(gen, 0.0, 1e5));
        const StrainEnergy w = strain_energy(s, m);
        CHECK(w.scaled == doctest::Approx(0.5 * w.unscaled).epsilon(1e-15));
        CHECK(w.unscaled ==
              doctest::Approx(m.c1 * (s.i1 - 3.0) + m.c2 * (s.i2 - 3.0)).epsilon(1e-15));
    }
}

TEST_CASE("normal stresses match the closed-form components") {
    const MaterialParams m(1.1e4, 2.2e4);
    const double R = 0.027, r = 0.03, p = 500.0;
    const StressState s = normal_stresses(R, r, p, m);
    const double R2 = R * R, r2 = r * r;
    const double sigma_rr = m.c1 * (R2 * R2) / (r2 * r2) - m.c2 * (r2 * r2) / (R2 * R2) - p;
    const double sigma_tt = m.c1 * r2 / R2 - m.c2 * R2 / r2 - p;
    CHECK(s.sigma_rr == doctest::Approx(sigma_rr).epsilon(1e-14));
    CHECK(s.sigma_tt == doctest::Approx(sigma_tt).epsilon(1e-14));
    CHECK(s.sigma_pp == s.sigma_tt);
    CHECK(s.hydrostatic_p == p);
    CHECK(s.at_R == R);
    CHECK(s.at_r == r);
}

TEST_CASE("undeformed stress is zero when p balances the moduli") {
    const MaterialParams m(1.1e4, 2.2e4);
    const StressState s = normal_stresses(0.028, 0.028, m.c1 - m.c2, m);
    CHECK(std::abs(s.sigma_rr) < 1e-9);
    CHECK(std::abs(s.sigma_tt) < 1e-9);
}

TEST_CASE("deviatoric diagonal is the p-independent part of the stress") {
    std::mt19937_64 gen(8);
    for (int trial = 0; trial < 100; ++trial) {
        const double R = uniform(gen, 0.02, 0.04);
        const double r = uniform(gen, 0.02, 0.04);
        const double p = uniform(gen, -1e4, 1e4);
        const MaterialParams m(uniform(gen, 5e3, 5e4), uniform(gen, 0.0, 1e5));
        const StretchState st = stretches(R, r);
        const auto dev = deviatoric_stress_diag(st, m);
        const StressState s = normal_stresses(R, r, p, m);
        CHECK(dev[0] == doctest::Approx(s.sigma_rr + p).epsilon(1e-12));
        CHECK(dev[1] == doctest::Approx(s.sigma_pp + p).epsilon(1e-12));
        CHECK(dev[2] == doctest::Approx(s.sigma_tt + p).epsilon(1e-12));
    }
}

TEST_CASE("deviatoric diagonal at rest is C1 - C2") {
    const MaterialParams m(1.1e4, 2.2e4);
    const auto dev = deviatoric_stress_diag(stretches(0.03, 0.03), m);
    for (double d : dev)
        CHECK(d == doctest::Approx(m.c1 - m.c2).epsilon(1e-15));
}

TEST_CASE("hoop-radial difference is independent of p and balances recovery") {
    std::mt19937_64 gen(9);
    for (int trial = 0; trial < 100; ++trial) {
        const double R = uniform(gen, 0.02, 0.04);
        const double r = uniform(gen, 0.02, 0.04);
        const double p = uniform(gen, -1e4, 1e4);
        const MaterialParams m(uniform(gen, 5e3, 5e4), uniform(gen, 0.0, 1e5));
        const StressState s = normal_stresses(R, r, p, m);
        CHECK(hoop_radial_difference(R, r, m) ==
              doctest::Approx(s.sigma_tt - s.sigma_rr).epsilon(1e-11).scale(m.c1 + m.c2));
        CHECK(hydrostatic_from_radial(R, r, s.sigma_rr, m) ==
              doctest::Approx(p).epsilon(1e-11).scale(m.c1 + m.c2));
    }
}

TEST_CASE("energy differentiation reproduces the stress difference") {
    // Central-difference oracle along the volume-preserving stretch family,
    // compared with the analytic hoop-minus-radial difference.
    std::mt19937_64 gen(10);
    for (double t : testkit::random_hoop_stretches(0x5eedf00d, 100)) {
        const MaterialParams m(uniform(gen, 5e3, 5e4), uniform(gen, 0.0, 1e5));
        const double R = 0.03;
        const double r = t * R;
        const double analytic = hoop_radial_difference(R, r, m);
        const double fd = testkit::energy_stress_difference_fd(t, m, 1e-6);
        const double denom = std::max(std::abs(analytic), 1e-9 * (m.c1 + m.c2));
        CHECK(std::abs(fd - analytic) / denom < 1e-5);
    }
}

TEST_CASE("finite-difference energy check converges at second order") {
    const MaterialParams m(1.1e4, 2.2e4);
    for (double t : {0.8, 1.2, 1.6}) {
        const double analytic = hoop_radial_difference(0.03, t * 0.03, m);
        const double e1 = std::abs(testkit::energy_stress_difference_fd(t, m, 1e-3) - analytic);
        const double e2 = std::abs(testkit::energy_stress_difference_fd(t, m, 5e-4) - analytic);
        const double e3 = std::abs(testkit::energy_stress_difference_fd(t, m, 2.5e-4) - analytic);
        CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.15));
        CHECK(e2 / e3 == doctest::Approx(4.0).epsilon(0.15));
    }
}
