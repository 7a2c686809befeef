#include "iab/mesh_export.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "iab/errors.hpp"

namespace iab {

namespace {

void check_resolution(int latitudes, int longitudes) {
    if (latitudes < 4 || longitudes < 8)
        throw DomainError("mesh resolution must be at least 4 latitudes x 8 longitudes");
}

} // namespace

std::string sphere_mesh_ply(double radius, int latitudes, int longitudes) {
    check_resolution(latitudes, longitudes);
    if (!(radius > 0.0))
        throw DomainError("mesh radius must be positive");

    const int rings = latitudes + 1;
    const int vertex_count = rings * longitudes;
    const int face_count = longitudes * (2 * (latitudes - 2) + 2);

    std::ostringstream out;
    out << "ply\nformat ascii 1.0\n"
        << "element vertex " << vertex_count << "\n"
        << "property double x\nproperty double y\nproperty double z\n"
        << "element face " << face_count << "\n"
        << "property list uchar int vertex_indices\nend_header\n";

    char line[128];
    for (int i = 0; i < rings; ++i) {
        const double phi = std::numbers::pi * static_cast<double>(i) / latitudes;
        const double z = radius * std::cos(phi);
        const double ring_r = radius * std::sin(phi);
        for (int j = 0; j < longitudes; ++j) {
            const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / longitudes;
            std::snprintf(line, sizeof line, "%.17g %.17g %.17g\n", ring_r * std::cos(theta),
                          ring_r * std::sin(theta), z);
            out << line;
        }
    }

    const auto vertex = [&](int ring, int j) { return ring * longitudes + (j % longitudes); };
    for (int i = 0; i < latitudes; ++i) {
        for (int j = 0; j < longitudes; ++j) {
            const int a = vertex(i, j);
            const int b = vertex(i + 1, j);
            const int c = vertex(i + 1, j + 1);
            const int d = vertex(i, j + 1);
            if (i == 0) {
                out << "3 " << a << " " << b << " " << c << "\n";
            } else if (i + 1 == latitudes) {
                out << "3 " << a << " " << b << " " << d << "\n";
            } else {
                out << "3 " << a << " " << b << " " << c << "\n";
                out << "3 " << a << " " << c << " " << d << "\n";
            }
        }
    }
    return out.str();
}

std::string sphere_scalar_csv(double R, double r, double sigma_rr, double hydrostatic_p,
                              int latitudes, int longitudes) {
    check_resolution(latitudes, longitudes);
    const int vertex_count = (latitudes + 1) * longitudes;
    std::string out = "vertex,R,r,sigma_rr,p\n";
    char line[192];
    for (int v = 0; v < vertex_count; ++v) {
        std::snprintf(line, sizeof line, "%d,%.17g,%.17g,%.17g,%.17g\n", v, R, r, sigma_rr,
                      hydrostatic_p);
        out += line;
    }
    return out;
}

} // namespace iab
