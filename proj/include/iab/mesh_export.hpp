#pragma once

#include <string>

namespace iab {

/// Ascii PLY lat-long tessellation of a radius-r sphere centered at the
/// origin: (latitudes+1) rings of `longitudes` vertices, pole bands emitted
/// as triangles, interior bands as split quads.
std::string sphere_mesh_ply(double radius, int latitudes, int longitudes);

/// Per-vertex field table in sphere_mesh_ply vertex order, header
/// "vertex,R,r,sigma_rr,p". Spherical symmetry makes the values uniform over
/// a surface; the table exists so viewers can color either mesh.
std::string sphere_scalar_csv(double R, double r, double sigma_rr, double hydrostatic_p,
                              int latitudes, int longitudes);

} // namespace iab
