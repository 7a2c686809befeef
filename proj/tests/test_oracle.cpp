#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "iab/solver.hpp"
#include "iab/testkit/oracle.hpp"

using namespace iab;

TEST_CASE("oracle config rejects out-of-range knobs") {
    CHECK_NOTHROW(testkit::OracleConfig(1000, 1e-9, 1));
    CHECK_THROWS_AS(testkit::OracleConfig(999, 1e-6, 1), DomainError);
    CHECK_THROWS_AS(testkit::OracleConfig(2000, 1e-10, 1), DomainError);
    CHECK_THROWS_AS(testkit::OracleConfig(2000, 1e-2, 1), DomainError);
    CHECK_THROWS_AS(testkit::trapezoid_pressure(ReferenceShell(0.027, 0.03), 0.03,
                                                MaterialParams(1.1e4, 2.2e4), 10),
                    DomainError);
}

TEST_CASE("trapezoid pressure self-converges at second order") {
    const ReferenceShell shell(0.027, 0.03);
    const MaterialParams mat(1.1e4, 2.2e4);
    const testkit::TrapezoidResult coarse = testkit::trapezoid_pressure(shell, 0.03, mat, 20000);
    const testkit::TrapezoidResult fine = testkit::trapezoid_pressure(shell, 0.03, mat, 40000);
    CHECK(coarse.panels == 20000);
    // Quadrupling accuracy per halving: the two grids agree to the coarse
    // Richardson estimate, and that estimate itself is tiny.
    CHECK(std::abs(coarse.value - fine.value) <= coarse.error_estimate * 1.5 + 1e-12);
    CHECK(coarse.error_estimate <= 1e-4 * std::abs(coarse.value));
    const double ratio = coarse.error_estimate / fine.error_estimate;
    CHECK(ratio > 3.0);
    CHECK(ratio < 5.0);
}

TEST_CASE("trapezoid oracle agrees with the adaptive solver") {
    const ReferenceShell shell(0.027, 0.03);
    const MaterialParams mat(1.1e4, 2.2e4);
    const double adaptive = internal_pressure(shell, 0.03, mat).pressure;
    const testkit::TrapezoidResult brute = testkit::trapezoid_pressure(shell, 0.03, mat, 1000000);
    CHECK(std::abs(adaptive - brute.value) <= 1e-6 * std::abs(brute.value));
}

TEST_CASE("identity deformation integrates to exactly zero") {
    const testkit::TrapezoidResult rest = testkit::trapezoid_pressure(
        ReferenceShell(0.0275, 0.03), 0.0275, MaterialParams(1.1e4, 2.2e4), 5000);
    CHECK(rest.value == 0.0);
    CHECK(rest.error_estimate == 0.0);
}

TEST_CASE("odd panel counts are rounded up to even") {
    const testkit::TrapezoidResult r = testkit::trapezoid_pressure(
        ReferenceShell(0.027, 0.03), 0.03, MaterialParams(1.1e4, 2.2e4), 1001);
    CHECK(r.panels == 1002);
}

TEST_CASE("finite-difference stress difference has the right signs") {
    const MaterialParams mat(1.1e4, 2.2e4);
    CHECK(testkit::energy_stress_difference_fd(1.2, mat, 1e-6) > 0.0);
    CHECK(testkit::energy_stress_difference_fd(0.9, mat, 1e-6) < 0.0);
    CHECK_THROWS_AS(testkit::energy_stress_difference_fd(1.2, mat, 1e-10), DomainError);
    CHECK_THROWS_AS(testkit::energy_stress_difference_fd(-1.0, mat, 1e-6), DomainError);
}

TEST_CASE("finite-difference stress difference matches the closed form") {
    const MaterialParams mat(8e3, 4.4e4);
    for (double t : {0.7, 0.95, 1.1, 1.5, 1.9}) {
        // lambda_theta = t, lambda_r = t^-2; hoop minus radial from the
        // constitutive components directly.
        const double r_ratio = t;
        const double fd = testkit::energy_stress_difference_fd(t, mat, 1e-6);
        const double exact = hoop_radial_difference(1.0, r_ratio, mat);
        const double floor = 1e-9 * (mat.c1 + mat.c2);
        CHECK(std::abs(fd - exact) <= 1e-5 * std::max(std::abs(exact), floor));
    }
}

TEST_CASE("scenario batches are deterministic and in range") {
    const std::vector<testkit::Scenario> a = testkit::random_scenarios(0xabc, 50);
    const std::vector<testkit::Scenario> b = testkit::random_scenarios(0xabc, 50);
    REQUIRE(a.size() == 50);
    REQUIRE(b.size() == 50);
    for (std::size_t k = 0; k < a.size(); ++k) {
        CHECK(a[k].shell.inner == b[k].shell.inner);
        CHECK(a[k].r_i == b[k].r_i);
        CHECK(a[k].material.c2 == b[k].material.c2);
        CHECK(a[k].shell.inner >= 0.02);
        CHECK(a[k].shell.inner <= 0.035);
        CHECK(a[k].shell.thickness() >= 0.001);
        CHECK(a[k].shell.thickness() <= 0.005);
        CHECK(a[k].r_i / a[k].shell.inner >= 0.85);
        CHECK(a[k].r_i / a[k].shell.inner <= 1.25);
        CHECK(a[k].material.c1 >= 5e3);
        CHECK(a[k].material.c1 <= 5e4);
        CHECK(a[k].material.c2 >= 0.0);
        CHECK(a[k].material.c2 <= 1e5);
    }
    const std::vector<testkit::Scenario> c = testkit::random_scenarios(0xabd, 50);
    CHECK(c[0].shell.inner != a[0].shell.inner);
}

TEST_CASE("hoop stretch draws avoid the unit band") {
    const std::vector<double> ts = testkit::random_hoop_stretches(0x5eed, 200);
    REQUIRE(ts.size() == 200);
    for (double t : ts) {
        CHECK(t >= 0.5);
        CHECK(t <= 2.0);
        CHECK(std::abs(t - 1.0) >= 0.02);
    }
    CHECK(testkit::random_hoop_stretches(0x5eed, 200) == ts);
}

TEST_CASE("uniform draw stays inside its interval and is reproducible") {
    std::mt19937_64 gen(42);
    std::mt19937_64 gen2(42);
    for (int k = 0; k < 1000; ++k) {
        const double x = testkit::uniform(gen, -3.0, 7.0);
        CHECK(x >= -3.0);
        CHECK(x < 7.0);
        CHECK(x == testkit::uniform(gen2, -3.0, 7.0));
    }
}
