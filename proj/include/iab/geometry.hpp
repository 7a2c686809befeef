#pragma once

#include <array>

#include "iab/errors.hpp"

namespace iab {

/// Deformed inner radii below this are treated as wall collapse.
inline constexpr double kCollapseGuard = 1e-9;

/// Undeformed shell radii in meters. Validated on construction.
struct ReferenceShell {
    double inner = 0.0;
    double outer = 0.0;

    ReferenceShell(double inner_m, double outer_m);
    double thickness() const noexcept { return outer - inner; }
};

/// Current (inflated or deflated) shell radii in meters. Validated on construction.
struct DeformedShell {
    double inner = 0.0;
    double outer = 0.0;

    DeformedShell(double inner_m, double outer_m);
    double thickness() const noexcept { return outer - inner; }
};

/// Mooney-Rivlin moduli in pascals plus bookkeeping constants.
/// density (kg/m^3) and poisson are carried through to reports only.
struct MaterialParams {
    double c1 = 0.0;
    double c2 = 0.0;
    double density = 0.1;
    double poisson = 0.45;

    MaterialParams(double c1_pa, double c2_pa, double density_kgm3 = 0.1,
                   double poisson_ratio = 0.45);
};

/// Principal stretches and the two isochoric invariants at one wall point.
/// lambda_theta and lambda_phi are a single stored value (spherical symmetry).
struct StretchState {
    double lambda_r;
    double lambda_theta;
    double lambda_phi;
    double i1;
    double i2;
};

/// Diagonal deformation gradient, ordered (radial, azimuthal, zenith).
struct DeformationGradient {
    double radial;
    double azimuthal;
    double zenith;

    double determinant() const noexcept { return radial * azimuthal * zenith; }
    std::array<double, 3> diagonal() const noexcept { return {radial, azimuthal, zenith}; }
};

/// Sign-preserving cube root.
double real_cbrt(double x) noexcept;

/// Deformed radius of the material sphere at reference radius R, for an
/// incompressible wall whose inner surface moved from ref.inner to r_i.
/// Throws DomainError if R lies outside the wall or r_i is collapsed.
double map_radius(double R, const ReferenceShell& ref, double r_i);

/// Inverse of map_radius: reference radius of the material sphere currently at r.
double reference_radius(double r, const ReferenceShell& ref, double r_i);

/// Deformed shell produced by moving the inner surface to r_i.
DeformedShell deform(const ReferenceShell& ref, double r_i);

/// Stretches and invariants for the material point at (R, r).
StretchState stretches(double R, double r);

DeformationGradient deformation_gradient(const StretchState& s) noexcept;

/// Volume of a spherical shell between two radii.
double wall_volume(double inner, double outer) noexcept;
double wall_volume(const ReferenceShell& shell) noexcept;
double wall_volume(const DeformedShell& shell) noexcept;

} // namespace iab
