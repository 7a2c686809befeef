#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <cstring>
#include <random>
#include <string>
#include <vector>

#include "iab/constitutive.hpp"
#include "iab/geometry.hpp"
#include "iab/kernels.hpp"
#include "iab/testkit/oracle.hpp"

using namespace iab;

namespace {

// Distance in units-in-the-last-place between two finite doubles of the same
// sign, via the monotone mapping from doubles to ordered integers.
std::int64_t ulp_distance(double a, double b) {
    auto ordered = [](double x) {
        std::int64_t bits;
        std::memcpy(&bits, &x, sizeof bits);
        return bits < 0 ? std::numeric_limits<std::int64_t>::min() - bits : bits;
    };
    const std::int64_t d = ordered(a) - ordered(b);
    return d < 0 ? -d : d;
}

struct Batch {
    std::vector<double> R, r;
    double shift = 0.0;
};

Batch make_batch(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    Batch batch;
    const double R_i = testkit::uniform(gen, 0.02, 0.03);
    const double R_o = R_i + testkit::uniform(gen, 0.001, 0.005);
    const double r_i = R_i * testkit::uniform(gen, 0.85, 1.25);
    batch.shift = r_i * r_i * r_i - R_i * R_i * R_i;
    const ReferenceShell shell(R_i, R_o);
    for (std::size_t j = 0; j < n; ++j) {
        const double R = testkit::uniform(gen, R_i, R_o);
        batch.R.push_back(R);
        batch.r.push_back(map_radius(R, shell, r_i));
    }
    return batch;
}

struct BackendGuard {
    ~BackendGuard() { kernels::reset_backend(); }
};

} // namespace

TEST_CASE("backend names and availability are consistent") {
    CHECK(std::string(kernels::backend_name(kernels::Backend::scalar)) == "scalar");
    CHECK(std::string(kernels::backend_name(kernels::Backend::avx2)) == "avx2");
    CHECK(kernels::backend_available(kernels::Backend::scalar));
    CHECK(kernels::backend_available(kernels::active_backend()));
}

TEST_CASE("force and reset switch the active backend") {
    BackendGuard guard;
    kernels::force_backend(kernels::Backend::scalar);
    CHECK(kernels::active_backend() == kernels::Backend::scalar);
    if (kernels::backend_available(kernels::Backend::avx2)) {
        kernels::force_backend(kernels::Backend::avx2);
        CHECK(kernels::active_backend() == kernels::Backend::avx2);
    }
    kernels::reset_backend();
    CHECK(kernels::backend_available(kernels::active_backend()));
}

TEST_CASE("forcing an unavailable backend throws") {
    if (kernels::backend_available(kernels::Backend::avx2))
        return;
    CHECK_THROWS_AS(kernels::force_backend(kernels::Backend::avx2), std::invalid_argument);
}

TEST_CASE("scalar kernels match the single-sample routines bit for bit") {
    BackendGuard guard;
    kernels::force_backend(kernels::Backend::scalar);
    const Batch batch = make_batch(257, 0x11u);
    const std::size_t n = batch.R.size();
    std::vector<double> r_k(n), R_k(n), lr(n), lt(n), i1(n), i2(n), dev(n), diff(n);

    kernels::map_radius(batch.R.data(), r_k.data(), n, batch.shift);
    kernels::reference_radius(batch.r.data(), R_k.data(), n, batch.shift);
    kernels::principal_stretches(batch.R.data(), batch.r.data(), lr.data(), lt.data(), n);
    kernels::invariants(batch.R.data(), batch.r.data(), i1.data(), i2.data(), n);
    const MaterialParams mat(1.1e4, 2.2e4);
    kernels::radial_deviatoric(batch.R.data(), batch.r.data(), dev.data(), n, mat.c1, mat.c2);
    kernels::hoop_radial_difference(batch.R.data(), batch.r.data(), diff.data(), n, mat.c1,
                                    mat.c2);

    for (std::size_t j = 0; j < n; ++j) {
        const double R = batch.R[j], r = batch.r[j];
        CHECK(r_k[j] == std::cbrt(R * R * R + batch.shift));
        CHECK(R_k[j] == std::cbrt(r * r * r - batch.shift));
        const StretchState s = stretches(R, r);
        CHECK(lr[j] == s.lambda_r);
        CHECK(lt[j] == s.lambda_theta);
        CHECK(i1[j] == s.i1);
        CHECK(i2[j] == s.i2);
        CHECK(dev[j] == deviatoric_stress_diag(s, mat)[0]);
        CHECK(diff[j] == hoop_radial_difference(R, r, mat));
    }
}

TEST_CASE("avx2 kernels agree with scalar to a few ulps") {
    if (!kernels::backend_available(kernels::Backend::avx2))
        return;
    BackendGuard guard;
    const MaterialParams mat(9e3, 3.1e4);

    // Lengths straddling the vector width exercise every remainder path.
    for (std::size_t n : {1u, 2u, 3u, 4u, 5u, 6u, 7u, 8u, 9u, 1024u}) {
        const Batch batch = make_batch(n, 0x900 + n);
        std::vector<double> a(n), b(n);

        auto compare = [&](auto&& run, double ulps) {
            kernels::force_backend(kernels::Backend::scalar);
            run(a.data());
            kernels::force_backend(kernels::Backend::avx2);
            run(b.data());
            for (std::size_t j = 0; j < n; ++j)
                CHECK(ulp_distance(a[j], b[j]) <= ulps);
        };

        compare([&](double* out) { kernels::map_radius(batch.R.data(), out, n, batch.shift); },
                4);
        compare(
            [&](double* out) { kernels::reference_radius(batch.r.data(), out, n, batch.shift); },
            4);
        std::vector<double> scratch(n);
        compare(
            [&](double* out) {
                kernels::principal_stretches(batch.R.data(), batch.r.data(), out, scratch.data(),
                                             n);
            },
            4);
        compare(
            [&](double* out) {
                kernels::invariants(batch.R.data(), batch.r.data(), out, scratch.data(), n);
            },
            8);
        compare(
            [&](double* out) {
                kernels::radial_deviatoric(batch.R.data(), batch.r.data(), out, n, mat.c1,
                                           mat.c2);
            },
            8);
        compare(
            [&](double* out) {
                kernels::hoop_radial_difference(batch.R.data(), batch.r.data(), out, n, mat.c1,
                                                mat.c2);
            },
            16);
    }
}

TEST_CASE("batch cube roots track std::cbrt closely on both backends") {
    BackendGuard guard;
    const Batch batch = make_batch(513, 0xcb7u);
    const std::size_t n = batch.R.size();
    std::vector<double> out(n);
    for (kernels::Backend b : {kernels::Backend::scalar, kernels::Backend::avx2}) {
        if (!kernels::backend_available(b))
            continue;
        kernels::force_backend(b);
        kernels::map_radius(batch.R.data(), out.data(), n, batch.shift);
        for (std::size_t j = 0; j < n; ++j) {
            const double exact = std::cbrt(batch.R[j] * batch.R[j] * batch.R[j] + batch.shift);
            CHECK(ulp_distance(out[j], exact) <= 4);
        }
    }
}

TEST_CASE("each backend is run-to-run deterministic") {
    BackendGuard guard;
    const Batch batch = make_batch(301, 0xdeu);
    const std::size_t n = batch.R.size();
    for (kernels::Backend b : {kernels::Backend::scalar, kernels::Backend::avx2}) {
        if (!kernels::backend_available(b))
            continue;
        kernels::force_backend(b);
        std::vector<double> first(n), second(n);
        kernels::map_radius(batch.R.data(), first.data(), n, batch.shift);
        kernels::map_radius(batch.R.data(), second.data(), n, batch.shift);
        CHECK(std::memcmp(first.data(), second.data(), n * sizeof(double)) == 0);
        kernels::hoop_radial_difference(batch.R.data(), batch.r.data(), first.data(), n, 1.1e4,
                                        2.2e4);
        kernels::hoop_radial_difference(batch.R.data(), batch.r.data(), second.data(), n, 1.1e4,
                                        2.2e4);
        CHECK(std::memcmp(first.data(), second.data(), n * sizeof(double)) == 0);
    }
}

TEST_CASE("round trip through both radius maps is tight") {
    BackendGuard guard;
    const Batch batch = make_batch(128, 0x77u);
    const std::size_t n = batch.R.size();
    std::vector<double> r(n), R_back(n);
    for (kernels::Backend b : {kernels::Backend::scalar, kernels::Backend::avx2}) {
        if (!kernels::backend_available(b))
            continue;
        kernels::force_backend(b);
        kernels::map_radius(batch.R.data(), r.data(), n, batch.shift);
        kernels::reference_radius(r.data(), R_back.data(), n, batch.shift);
        for (std::size_t j = 0; j < n; ++j)
            CHECK(std::abs(R_back[j] - batch.R[j]) <= 1e-12 * batch.R[j]);
    }
}
