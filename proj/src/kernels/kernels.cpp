#include "iab/kernels.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ops.hpp"

namespace iab::kernels {

namespace detail {
namespace {

void map_radius_scalar(const double* R, double* r, std::size_t n, double shift) {
    // A zero shift is the identity map; copying keeps it exact rather than
    // within one ulp of the cube-root round trip.
    if (shift == 0.0) {
        for (std::size_t j = 0; j < n; ++j)
            r[j] = R[j];
        return;
    }
    for (std::size_t j = 0; j < n; ++j)
        r[j] = std::cbrt(R[j] * R[j] * R[j] + shift);
}

void reference_radius_scalar(const double* r, double* R, std::size_t n, double shift) {
    if (shift == 0.0) {
        for (std::size_t j = 0; j < n; ++j)
            R[j] = r[j];
        return;
    }
    for (std::size_t j = 0; j < n; ++j)
        R[j] = std::cbrt(r[j] * r[j] * r[j] - shift);
}

void principal_stretches_scalar(const double* R, const double* r, double* lambda_r,
                                double* lambda_t, std::size_t n) {
    for (std::size_t j = 0; j < n; ++j) {
        lambda_t[j] = r[j] / R[j];
        lambda_r[j] = (R[j] * R[j]) / (r[j] * r[j]);
    }
}

void invariants_scalar(const double* R, const double* r, double* i1, double* i2, std::size_t n) {
    for (std::size_t j = 0; j < n; ++j) {
        const double hoop = r[j] / R[j];
        const double radial = (R[j] * R[j]) / (r[j] * r[j]);
        const double hoop2 = hoop * hoop;
        const double radial2 = radial * radial;
        i1[j] = radial2 + 2.0 * hoop2;
        i2[j] = 1.0 / radial2 + 2.0 / hoop2;
    }
}

void radial_deviatoric_scalar(const double* R, const double* r, double* dev, std::size_t n,
                              double c1, double c2) {
    for (std::size_t j = 0; j < n; ++j) {
        const double lambda = (R[j] * R[j]) / (r[j] * r[j]);
        const double l2 = lambda * lambda;
        dev[j] = c1 * l2 - c2 / l2;
    }
}

void hoop_radial_difference_scalar(const double* R, const double* r, double* diff, std::size_t n,
                                   double c1, double c2) {
    for (std::size_t j = 0; j < n; ++j) {
        const double hoop = r[j] / R[j];
        const double radial = (R[j] * R[j]) / (r[j] * r[j]);
        const double h2 = hoop * hoop;
        const double q2 = radial * radial;
        diff[j] = (c1 * h2 - c2 / h2) - (c1 * q2 - c2 / q2);
    }
}

} // namespace

const Ops& scalar_ops() noexcept {
    static const Ops ops{
        map_radius_scalar,        reference_radius_scalar,
        principal_stretches_scalar, invariants_scalar,
        radial_deviatoric_scalar, hoop_radial_difference_scalar,
    };
    return ops;
}

} // namespace detail

namespace {

const detail::Ops* resolve_auto() noexcept {
#if defined(IAB_HAVE_AVX2_TU)
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
        return &detail::avx2_ops();
#endif
    return &detail::scalar_ops();
}

std::atomic<const detail::Ops*> g_active{nullptr};

const detail::Ops& active() noexcept {
    const detail::Ops* p = g_active.load(std::memory_order_relaxed);
    if (p == nullptr) {
        p = resolve_auto();
        g_active.store(p, std::memory_order_relaxed);
    }
    return *p;
}

} // namespace

Backend active_backend() noexcept {
#if defined(IAB_HAVE_AVX2_TU)
    if (&active() == &detail::avx2_ops())
        return Backend::avx2;
#endif
    return Backend::scalar;
}

const char* backend_name(Backend b) noexcept {
    switch (b) {
    case Backend::scalar: return "scalar";
    case Backend::avx2: return "avx2";
    }
    return "unknown";
}

bool backend_available(Backend b) noexcept {
    if (b == Backend::scalar)
        return true;
#if defined(IAB_HAVE_AVX2_TU)
    if (b == Backend::avx2)
        return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#endif
    return false;
}

void force_backend(Backend b) {
    if (!backend_available(b))
        throw std::invalid_argument(std::string("kernel backend unavailable on this CPU: ") +
                                    backend_name(b));
    if (b == Backend::scalar) {
        g_active.store(&detail::scalar_ops(), std::memory_order_relaxed);
        return;
    }
#if defined(IAB_HAVE_AVX2_TU)
    g_active.store(&detail::avx2_ops(), std::memory_order_relaxed);
#endif
}

void reset_backend() noexcept {
    g_active.store(resolve_auto(), std::memory_order_relaxed);
}

void map_radius(const double* R, double* r, std::size_t n, double shift) {
    active().map_radius(R, r, n, shift);
}

void reference_radius(const double* r, double* R, std::size_t n, double shift) {
    active().reference_radius(r, R, n, shift);
}

void principal_stretches(const double* R, const double* r, double* lambda_r, double* lambda_t,
                         std::size_t n) {
    active().principal_stretches(R, r, lambda_r, lambda_t, n);
}

void invariants(const double* R, const double* r, double* i1, double* i2, std::size_t n) {
    active().invariants(R, r, i1, i2, n);
}

void radial_deviatoric(const double* R, const double* r, double* dev, std::size_t n, double c1,
                       double c2) {
    active().radial_deviatoric(R, r, dev, n, c1, c2);
}

void hoop_radial_difference(const double* R, const double* r, double* diff, std::size_t n,
                            double c1, double c2) {
    active().hoop_radial_difference(R, r, diff, n, c1, c2);
}

} // namespace iab::kernels
