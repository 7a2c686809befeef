#include "iab/report.hpp"

#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <ctime>
#include <fstream>

#include "iab/kernels.hpp"

namespace iab {

using nlohmann::json;

json report_to_json(const SolveReport& report) {
    json sigma = json::array();
    json hydro = json::array();
    for (const ProfileSample& s : report.profile) {
        sigma.push_back({s.R, s.r, s.sigma_rr});
        hydro.push_back({s.r, s.hydrostatic_p});
    }
    return json{
        {"pressure", report.pressure},
        {"deformed", {{"inner_radius", report.deformed.inner}, {"outer_radius", report.deformed.outer}}},
        {"sigma_rr_profile", sigma},
        {"hydrostatic_profile", hydro},
        {"delta_wall_volume", report.delta_wall_volume},
        {"quadrature_error_estimate", report.quadrature_error_estimate},
        {"iterations", report.iterations},
    };
}

SolveReport report_from_json(const json& j) {
    const json& sigma = j.at("sigma_rr_profile");
    const json& hydro = j.at("hydrostatic_profile");
    if (sigma.size() != hydro.size())
        throw std::invalid_argument("profile arrays disagree in length");
    std::vector<ProfileSample> profile;
    profile.reserve(sigma.size());
    for (std::size_t k = 0; k < sigma.size(); ++k) {
        profile.push_back(ProfileSample{
            sigma[k].at(0).get<double>(),
            sigma[k].at(1).get<double>(),
            sigma[k].at(2).get<double>(),
            hydro[k].at(1).get<double>(),
        });
    }
    return SolveReport{
        j.at("pressure").get<double>(),
        DeformedShell(j.at("deformed").at("inner_radius").get<double>(),
                      j.at("deformed").at("outer_radius").get<double>()),
        std::move(profile),
        j.at("delta_wall_volume").get<double>(),
        j.at("quadrature_error_estimate").get<double>(),
        j.at("iterations").get<long>(),
    };
}

json forward_to_json(const ForwardResult& result) {
    json j{
        {"target_pressure", result.target_pressure},
        {"root_iterations", result.root_iterations},
        {"warning", nullptr},
        {"report", report_to_json(result.report)},
    };
    if (result.warning) {
        j["warning"] = json{
            {"monotone", result.warning->monotone},
            {"candidate_roots", result.warning->candidate_roots},
        };
    }
    return j;
}

json mechanism_to_json(const std::vector<IabSolve>& solves) {
    json units = json::array();
    for (const IabSolve& s : solves) {
        units.push_back({
            {"id", s.id},
            {"target_inner", s.target_inner},
            {"report", report_to_json(s.report)},
        });
    }
    return json{{"units", units}};
}

std::string profile_to_csv(const std::vector<ProfileSample>& profile) {
    std::string out = "R,r,sigma_rr,p\n";
    char line[160];
    for (const ProfileSample& s : profile) {
        std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g,%.17g\n", s.R, s.r, s.sigma_rr,
                      s.hydrostatic_p);
        out += line;
    }
    return out;
}

void write_json_file(const json& j, const std::filesystem::path& path) {
    write_text_file(j.dump(2) + "\n", path);
}

void write_text_file(const std::string& text, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write file: " + path.string());
    out << text;
    if (!out)
        throw std::runtime_error("write failed: " + path.string());
}

json run_metadata() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char stamp[32];
    std::tm tm_utc{};
    gmtime_r(&t, &tm_utc);
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return json{
        {"generated_at", stamp},
        {"kernel_backend", kernels::backend_name(kernels::active_backend())},
    };
}

} // namespace iab
