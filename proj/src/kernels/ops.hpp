#pragma once

#include <cstddef>

namespace iab::kernels::detail {

struct Ops {
    void (*map_radius)(const double*, double*, std::size_t, double);
    void (*reference_radius)(const double*, double*, std::size_t, double);
    void (*principal_stretches)(const double*, const double*, double*, double*, std::size_t);
    void (*invariants)(const double*, const double*, double*, double*, std::size_t);
    void (*radial_deviatoric)(const double*, const double*, double*, std::size_t, double, double);
    void (*hoop_radial_difference)(const double*, const double*, double*, std::size_t, double,
                                   double);
};

const Ops& scalar_ops() noexcept;
#if defined(IAB_HAVE_AVX2_TU)
const Ops& avx2_ops() noexcept;
#endif

} // namespace iab::kernels::detail
