#pragma once

#include <array>

#include "iab/geometry.hpp"

namespace iab {

/// Strain energy density in Pa. `scaled` = (C1(I1-3) + C2(I2-3))/2 is the
/// canonical value used throughout; `unscaled` keeps the unhalved convention.
struct StrainEnergy {
    double scaled;
    double unscaled;
};

/// Cauchy normal stresses (Pa) at one wall point, with the location and the
/// hydrostatic pressure that produced them.
struct StressState {
    double sigma_rr;
    double sigma_tt;
    double sigma_pp;
    double hydrostatic_p;
    double at_R;
    double at_r;
};

StrainEnergy strain_energy(const StretchState& s, const MaterialParams& m) noexcept;

/// Normal stresses at (R, r) for hydrostatic pressure p:
/// sigma_ii = C1 lambda_i^2 - C2 lambda_i^-2 - p.
StressState normal_stresses(double R, double r, double p, const MaterialParams& m);

/// Pressure-independent part of the normal stresses, diag-ordered like the
/// deformation gradient (radial, azimuthal, zenith).
std::array<double, 3> deviatoric_stress_diag(const StretchState& s, const MaterialParams& m) noexcept;

/// Hoop-minus-radial normal stress difference at (R, r); independent of p.
double hoop_radial_difference(double R, double r, const MaterialParams& m);

/// Hydrostatic pressure consistent with an imposed radial stress at (R, r).
double hydrostatic_from_radial(double R, double r, double sigma_rr, const MaterialParams& m);

} // namespace iab
