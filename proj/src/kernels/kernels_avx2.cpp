// AVX2+FMA lane-parallel variants of the batch kernels. Compiled only on
// x86-64 (see src/CMakeLists.txt); selected at runtime behind a cpuid check.
#include <immintrin.h>

#include <cmath>
#include <cstddef>

#include "ops.hpp"

namespace iab::kernels::detail {
namespace {

constexpr std::size_t kLanes = 4;

// Cube root of strictly positive lanes. Seed comes from the exponent-third
// bit trick evaluated in float precision, then four Halley refinements in
// double: y <- y (y^3 + 2x) / (2 y^3 + x). Accurate to a couple of ulps,
// which the equivalence tests pin down against std::cbrt.
inline __m256d cbrt4(__m256d x) {
    const __m128 xf = _mm256_cvtpd_ps(x);
    const __m128i bits = _mm_castps_si128(xf);
    const __m128 bits_f = _mm_cvtepi32_ps(bits);
    const __m128i third = _mm_cvtps_epi32(_mm_mul_ps(bits_f, _mm_set1_ps(1.0f / 3.0f)));
    const __m128i seed_bits = _mm_add_epi32(third, _mm_set1_epi32(0x2A555555));
    __m256d y = _mm256_cvtps_pd(_mm_castsi128_ps(seed_bits));
    for (int k = 0; k < 4; ++k) {
        const __m256d y3 = _mm256_mul_pd(_mm256_mul_pd(y, y), y);
        const __m256d num = _mm256_add_pd(y3, _mm256_add_pd(x, x));
        const __m256d den = _mm256_add_pd(_mm256_add_pd(y3, y3), x);
        y = _mm256_div_pd(_mm256_mul_pd(y, num), den);
    }
    return y;
}

void map_radius_avx2(const double* R, double* r, std::size_t n, double shift) {
    // Matches the scalar backend: a zero shift copies so the identity map is
    // exact on every lane.
    if (shift == 0.0) {
        for (std::size_t j = 0; j < n; ++j)
            r[j] = R[j];
        return;
    }
    const __m256d vshift = _mm256_set1_pd(shift);
    std::size_t j = 0;
    for (; j + kLanes <= n; j += kLanes) {
        const __m256d vR = _mm256_loadu_pd(R + j);
        const __m256d R2 = _mm256_mul_pd(vR, vR);
        const __m256d cube = _mm256_fmadd_pd(R2, vR, vshift);
        _mm256_storeu_pd(r + j, cbrt4(cube));
    }
    for (; j < n; ++j)
        r[j] = std::cbrt(R[j] * R[j] * R[j] + shift);
}

void reference_radius_avx2(const double* r, double* R, std::size_t n, double shift) {
    if (shift == 0.0) {
        for (std::size_t j = 0; j < n; ++j)
            R[j] = r[j];
        return;
    }
    const __m256d vshift = _mm256_set1_pd(shift);
    std::size_t j = 0;
    for (; j + kLanes <= n; j += kLanes) {
        const __m256d vr = _mm256_loadu_pd(r + j);
        const __m256d r2 = _mm256_mul_pd(vr, vr);
        const __m256d cube = _mm256_fmsub_pd(r2, vr, vshift);
        _mm256_storeu_pd(R + j, cbrt4(cube));
    }
    for (; j < n; ++j)
        R[j] = std::cbrt(r[j] * r[j] * r[j] - shift);
}

void principal_stretches_avx2(const double* R, const double* r, double* lambda_r, double* lambda_t,
                              std::size_t n) {
    std::size_t j = 0;
    for (; j + kLanes <= n; j += kLanes) {
        const __m256d vR = _mm256_loadu_pd(R + j);
        const __m256d vr = _mm256_loadu_pd(r + j);
        const __m256d hoop = _mm256_div_pd(vr, vR);
        const __m256d radial = _mm256_div_pd(_mm256_mul_pd(vR, vR), _mm256_mul_pd(vr, vr));
        _mm256_storeu_pd(lambda_t + j, hoop);
        _mm256_storeu_pd(lambda_r + j, radial);
    }
    for (; j < n; ++j) {
        lambda_t[j] = r[j] / R[j];
        lambda_r[j] = (R[j] * R[j]) / (r[j] * r[j]);
    }
}

void invariants_avx2(const double* R, const double* r, double* i1, double* i2, std::size_t n) {
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d two = _mm256_set1_pd(2.0);
    std::size_t j = 0;
    for (; j + kLanes <= n; j += kLanes) {
        const __m256d vR = _mm256_loadu_pd(R + j);
        const __m256d vr = _mm256_loadu_pd(r + j);
        const __m256d hoop = _mm256_div_pd(vr, vR);
        const __m256d radial = _mm256_div_pd(_mm256_mul_pd(vR, vR), _mm256_mul_pd(vr, vr));
        const __m256d h2 = _mm256_mul_pd(hoop, hoop);
        const __m256d q2 = _mm256_mul_pd(radial, radial);
        _mm256_storeu_pd(i1 + j, _mm256_fmadd_pd(two, h2, q2));
        const __m256d inv_q2 = _mm256_div_pd(one, q2);
        const __m256d inv_h2 = _mm256_div_pd(one, h2);
        _mm256_storeu_pd(i2 + j, _mm256_fmadd_pd(two, inv_h2, inv_q2));
    }
    for (; j < n; ++j) {
        const double hoop = r[j] / R[j];
        const double radial = (R[j] * R[j]) / (r[j] * r[j]);
        const double h2 = hoop * hoop;
        const double q2 = radial * radial;
        i1[j] = q2 + 2.0 * h2;
        i2[j] = 1.0 / q2 + 2.0 / h2;
    }
}

void radial_deviatoric_avx2(const double* R, const double* r, double* dev, std::size_t n,
                            double c1, double c2) {
    const __m256d vc1 = _mm256_set1_pd(c1);
    const __m256d vc2 = _mm256_set1_pd(c2);
    std::size_t j = 0;
    for (; j + kLanes <= n; j += kLanes) {
        const __m256d vR = _mm256_loadu_pd(R + j);
        const __m256d vr = _mm256_loadu_pd(r + j);
        const __m256d radial = _mm256_div_pd(_mm256_mul_pd(vR, vR), _mm256_mul_pd(vr, vr));
        const __m256d l2 = _mm256_mul_pd(radial, radial);
        const __m256d drop = _mm256_div_pd(vc2, l2);
        _mm256_storeu_pd(dev + j, _mm256_fmsub_pd(vc1, l2, drop));
    }
    for (; j < n; ++j) {
        const double radial = (R[j] * R[j]) / (r[j] * r[j]);
        const double l2 = radial * radial;
        dev[j] = c1 * l2 - c2 / l2;
    }
}

void hoop_radial_difference_avx2(const double* R, const double* r, double* diff, std::size_t n,
                                 double c1, double c2) {
    const __m256d vc1 = _mm256_set1_pd(c1);
    const __m256d vc2 = _mm256_set1_pd(c2);
    std::size_t j = 0;
    for (; j + kLanes <= n; j += kLanes) {
        const __m256d vR = _mm256_loadu_pd(R + j);
        const __m256d vr = _mm256_loadu_pd(r + j);
        const __m256d hoop = _mm256_div_pd(vr, vR);
        const __m256d radial = _mm256_div_pd(_mm256_mul_pd(vR, vR), _mm256_mul_pd(vr, vr));
        const __m256d h2 = _mm256_mul_pd(hoop, hoop);
        const __m256d q2 = _mm256_mul_pd(radial, radial);
        const __m256d hoop_part = _mm256_fmsub_pd(vc1, h2, _mm256_div_pd(vc2, h2));
        const __m256d radial_part = _mm256_fmsub_pd(vc1, q2, _mm256_div_pd(vc2, q2));
        _mm256_storeu_pd(diff + j, _mm256_sub_pd(hoop_part, radial_part));
    }
    for (; j < n; ++j) {
        const double hoop = r[j] / R[j];
        const double radial = (R[j] * R[j]) / (r[j] * r[j]);
        const double h2 = hoop * hoop;
        const double q2 = radial * radial;
        diff[j] = (c1 * h2 - c2 / h2) - (c1 * q2 - c2 / q2);
    }
}

} // namespace

const Ops& avx2_ops() noexcept {
    static const Ops ops{
        map_radius_avx2,        reference_radius_avx2,
        principal_stretches_avx2, invariants_avx2,
        radial_deviatoric_avx2, hoop_radial_difference_avx2,
    };
    return ops;
}

} // namespace iab::kernels::detail
