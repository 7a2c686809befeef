#pragma once

#include <cstddef>

namespace iab::kernels {

/// Batch kernels for per-sample field math (radius maps, stretches, stress
/// components). A SIMD variant is picked once at startup from CPU features;
/// force_backend pins one explicitly (tests, --backend flag). All kernels
/// assume strictly positive radii; domain checks belong to the callers.
enum class Backend { scalar, avx2 };

Backend active_backend() noexcept;
const char* backend_name(Backend b) noexcept;
bool backend_available(Backend b) noexcept;
/// Pins the backend; throws std::invalid_argument if unsupported on this CPU.
void force_backend(Backend b);
void reset_backend() noexcept;

/// r[j] = cbrt(R[j]^3 + shift), shift = r_i^3 - R_i^3.
void map_radius(const double* R, double* r, std::size_t n, double shift);
/// R[j] = cbrt(r[j]^3 - shift), same shift convention.
void reference_radius(const double* r, double* R, std::size_t n, double shift);
/// lambda_r[j] = R^2/r^2, lambda_t[j] = r/R.
void principal_stretches(const double* R, const double* r, double* lambda_r, double* lambda_t,
                         std::size_t n);
/// i1[j] = lr^2 + 2 lt^2, i2[j] = lr^-2 + 2 lt^-2 at (R[j], r[j]).
void invariants(const double* R, const double* r, double* i1, double* i2, std::size_t n);
/// dev[j] = C1 lr^2 - C2 lr^-2 (radial deviatoric normal stress).
void radial_deviatoric(const double* R, const double* r, double* dev, std::size_t n, double c1,
                       double c2);
/// diff[j] = sigma_tt - sigma_rr at (R[j], r[j]); independent of p.
void hoop_radial_difference(const double* R, const double* r, double* diff, std::size_t n,
                            double c1, double c2);

} // namespace iab::kernels
