#include "iab/constitutive.hpp"

namespace iab {

StrainEnergy strain_energy(const StretchState& s, const MaterialParams& m) noexcept {
    const double unscaled = m.c1 * (s.i1 - 3.0) + m.c2 * (s.i2 - 3.0);
    return StrainEnergy{0.5 * unscaled, unscaled};
}

StressState normal_stresses(double R, double r, double p, const MaterialParams& m) {
    const StretchState s = stretches(R, r);
    const std::array<double, 3> dev = deviatoric_stress_diag(s, m);
    return StressState{dev[0] - p, dev[2] - p, dev[1] - p, p, R, r};
}

std::array<double, 3> deviatoric_stress_diag(const StretchState& s, const MaterialParams& m) noexcept {
    const auto part = [&](double lambda) {
        const double l2 = lambda * lambda;
        return m.c1 * l2 - m.c2 / l2;
    };
    return {part(s.lambda_r), part(s.lambda_phi), part(s.lambda_theta)};
}

double hoop_radial_difference(double R, double r, const MaterialParams& m) {
    const StretchState s = stretches(R, r);
    const std::array<double, 3> dev = deviatoric_stress_diag(s, m);
    return dev[2] - dev[0];
}

double hydrostatic_from_radial(double R, double r, double sigma_rr, const MaterialParams& m) {
    const StretchState s = stretches(R, r);
    const std::array<double, 3> dev = deviatoric_stress_diag(s, m);
    return dev[0] - sigma_rr;
}

} // namespace iab
