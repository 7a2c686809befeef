#include "iab/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace iab {

namespace {

[[noreturn]] void fail_radii(const char* type, double inner, double outer) {
    std::ostringstream msg;
    msg << type << " radii invalid: inner=" << inner << " m, outer=" << outer
        << " m (need 0 < inner < outer)";
    throw DomainError(msg.str());
}

} // namespace

ReferenceShell::ReferenceShell(double inner_m, double outer_m) : inner(inner_m), outer(outer_m) {
    if (!(inner > 0.0) || !(outer > inner) || !std::isfinite(inner) || !std::isfinite(outer))
        fail_radii("reference shell", inner_m, outer_m);
}

DeformedShell::DeformedShell(double inner_m, double outer_m) : inner(inner_m), outer(outer_m) {
    if (!(inner > 0.0) || !(outer > inner) || !std::isfinite(inner) || !std::isfinite(outer))
        fail_radii("deformed shell", inner_m, outer_m);
}

MaterialParams::MaterialParams(double c1_pa, double c2_pa, double density_kgm3,
                               double poisson_ratio)
    : c1(c1_pa), c2(c2_pa), density(density_kgm3), poisson(poisson_ratio) {
    if (!(c1 > 0.0) || !std::isfinite(c1))
        throw DomainError("material modulus C1 must be positive");
    if (!(c2 >= 0.0) || !std::isfinite(c2))
        throw DomainError("material modulus C2 must be non-negative");
    if (!(density > 0.0))
        throw DomainError("material density must be positive");
    if (!(poisson > -1.0) || !(poisson < 0.5))
        throw DomainError("poisson ratio must lie in (-1, 0.5)");
}

double real_cbrt(double x) noexcept {
    return std::cbrt(x);
}

double map_radius(double R, const ReferenceShell& ref, double r_i) {
    if (!(R >= ref.inner) || !(R <= ref.outer)) {
        std::ostringstream msg;
        msg << "reference radius " << R << " m outside wall [" << ref.inner << ", " << ref.outer
            << "] m";
        throw DomainError(msg.str());
    }
    if (!(r_i >= kCollapseGuard)) {
        std::ostringstream msg;
        msg << "deformed inner radius " << r_i << " m below collapse guard " << kCollapseGuard
            << " m";
        throw DomainError(msg.str());
    }
    // Grouping the shift first makes it exactly zero for an undisplaced inner
    // face, and an unchanged cube then skips the cube root, so the identity
    // deformation is exact instead of within one ulp.
    const double shift = r_i * r_i * r_i - ref.inner * ref.inner * ref.inner;
    const double cube = R * R * R + shift;
    if (!(cube > 0.0))
        throw DomainError("deformation maps wall material through the origin");
    if (cube == R * R * R)
        return R;
    return real_cbrt(cube);
}

double reference_radius(double r, const ReferenceShell& ref, double r_i) {
    if (!(r_i >= kCollapseGuard))
        throw DomainError("deformed inner radius below collapse guard");
    const double shift = r_i * r_i * r_i - ref.inner * ref.inner * ref.inner;
    const double cube = r * r * r - shift;
    if (!(cube > 0.0))
        throw DomainError("deformed radius maps outside the material wall");
    const double R = cube == r * r * r ? r : real_cbrt(cube);
    // Tolerate roundoff at the wall faces; anything further out is a caller bug.
    const double slack = 16.0 * std::numeric_limits<double>::epsilon() * ref.outer;
    if (R < ref.inner - slack || R > ref.outer + slack) {
        std::ostringstream msg;
        msg << "deformed radius " << r << " m lies outside the deformed wall";
        throw DomainError(msg.str());
    }
    return std::min(std::max(R, ref.inner), ref.outer);
}

DeformedShell deform(const ReferenceShell& ref, double r_i) {
    return DeformedShell(r_i, map_radius(ref.outer, ref, r_i));
}

StretchState stretches(double R, double r) {
    if (!(R > 0.0) || !(r > 0.0))
        throw DomainError("stretch state requires positive radii");
    const double hoop = r / R;
    const double radial = (R * R) / (r * r);
    const double hoop2 = hoop * hoop;
    const double radial2 = radial * radial;
    return StretchState{
        radial, hoop, hoop,
        radial2 + 2.0 * hoop2,
        1.0 / radial2 + 2.0 / hoop2,
    };
}

DeformationGradient deformation_gradient(const StretchState& s) noexcept {
    return DeformationGradient{s.lambda_r, s.lambda_phi, s.lambda_theta};
}

double wall_volume(double inner, double outer) noexcept {
    constexpr double four_thirds_pi = 4.0 / 3.0 * std::numbers::pi;
    return four_thirds_pi * (outer * outer * outer - inner * inner * inner);
}

double wall_volume(const ReferenceShell& shell) noexcept {
    return wall_volume(shell.inner, shell.outer);
}

double wall_volume(const DeformedShell& shell) noexcept {
    return wall_volume(shell.inner, shell.outer);
}

} // namespace iab
