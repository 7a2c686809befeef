#include "iab/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "iab/mesh_export.hpp"
#include "iab/quadrature.hpp"
#include "iab/report.hpp"
#include "iab/testkit/oracle.hpp"

namespace iab {

using nlohmann::json;

namespace {

void write_meshes(const ScenarioConfig& cfg, const SolveReport& report,
                  const std::filesystem::path& out_dir, RunArtifacts& artifacts) {
    if (!cfg.output.mesh)
        return;
    const int lat = cfg.output.mesh_latitudes;
    const int lon = cfg.output.mesh_longitudes;
    const ProfileSample inner = report.profile.front();
    const ProfileSample outer = report.profile.back();
    const struct {
        const char* stem;
        double radius;
        ProfileSample at;
    } surfaces[2] = {
        {"deformed_inner", report.deformed.inner, inner},
        {"deformed_outer", report.deformed.outer, outer},
    };
    for (const auto& s : surfaces) {
        const auto ply = out_dir / (std::string(s.stem) + ".ply");
        write_text_file(sphere_mesh_ply(s.radius, lat, lon), ply);
        artifacts.written.push_back(ply);
        const auto csv = out_dir / (std::string(s.stem) + "_fields.csv");
        write_text_file(
            sphere_scalar_csv(s.at.R, s.at.r, s.at.sigma_rr, s.at.hydrostatic_p, lat, lon), csv);
        artifacts.written.push_back(csv);
    }
}

void write_common(const ScenarioConfig& cfg, const json& report_json,
                  const std::vector<ProfileSample>* profile, const std::filesystem::path& out_dir,
                  RunArtifacts& artifacts) {
    const auto report_path = out_dir / cfg.output.report;
    write_json_file(report_json, report_path);
    artifacts.written.push_back(report_path);
    if (profile != nullptr) {
        const auto profile_path = out_dir / cfg.output.profile;
        write_text_file(profile_to_csv(*profile), profile_path);
        artifacts.written.push_back(profile_path);
    }
    const auto meta_path = out_dir / "run_meta.json";
    write_json_file(run_metadata(), meta_path);
    artifacts.written.push_back(meta_path);
}

} // namespace

RunArtifacts run_scenario(const ScenarioConfig& cfg, const std::filesystem::path& out_dir) {
    std::filesystem::create_directories(out_dir);
    const SolveOptions opt = cfg.solve_options();
    RunArtifacts artifacts;

    switch (cfg.mode) {
    case RunMode::inverse:
    case RunMode::profile: {
        const SolveReport report =
            internal_pressure(cfg.reference, cfg.target_inner, cfg.material, opt);
        artifacts.report = report_to_json(report);
        write_common(cfg, artifacts.report, &report.profile, out_dir, artifacts);
        write_meshes(cfg, report, out_dir, artifacts);
        break;
    }
    case RunMode::forward: {
        const ForwardResult result =
            forward_solve(cfg.reference, cfg.target_pressure, cfg.material, opt);
        artifacts.report = forward_to_json(result);
        write_common(cfg, artifacts.report, &result.report.profile, out_dir, artifacts);
        write_meshes(cfg, result.report, out_dir, artifacts);
        break;
    }
    case RunMode::mechanism: {
        const std::vector<IabSolve> solves = apply_command(default_placements(), *cfg.command, opt);
        json j = mechanism_to_json(solves);
        j["command"] = {
            {"axis", axis_name(cfg.command->axis)},
            {"displacement", cfg.command->displacement},
        };
        artifacts.report = std::move(j);
        write_common(cfg, artifacts.report, nullptr, out_dir, artifacts);
        break;
    }
    }
    return artifacts;
}

PublishedScenario published_expansion() {
    return PublishedScenario{
        "expansion",
        ReferenceShell(0.027, 0.03),
        0.03,
        MaterialParams(1.1e4, 2.2e4),
        0.76,
        0.033,
        {},
    };
}

PublishedScenario published_compression() {
    return PublishedScenario{
        "compression",
        // The printed compression table (reference 0.025->0.03, current
        // 0.03->0.028) violates volume preservation outright; this runs the
        // narrative-consistent variant instead: the shell starts from the
        // expanded configuration and pulls its inner face in by 2 mm.
        ReferenceShell(0.03, 0.033),
        0.028,
        MaterialParams(1.1e4, 2.2e4),
        -0.34,
        std::nullopt,
        {"published compression table radii are mutually inconsistent (they violate volume "
         "preservation); computed values use the narrative-consistent variant r_i: 0.03 m -> "
         "0.028 m with the 3 mm wall"},
    };
}

PaperComparison reproduce_published(const std::filesystem::path* out_dir) {
    if (out_dir != nullptr)
        std::filesystem::create_directories(*out_dir);
    std::ostringstream table;
    json summary;
    summary["scenarios"] = json::array();

    char buf[256];
    table << "Published-experiment comparison\n";
    table << "--------------------------------\n";

    std::vector<std::string> flags;
    flags.push_back(
        "published pressure magnitudes (0.76 / -0.34) do not state a unit and are not "
        "reproducible at any single SI scale; signs and geometry are compared, magnitudes are "
        "reported side by side only");

    for (const PublishedScenario& sc : {published_expansion(), published_compression()}) {
        const SolveReport report = internal_pressure(sc.shell, sc.inner_target, sc.material);

        // Independent routes for the same integral: reference-coordinate
        // parametrization and the testkit trapezoid oracle.
        auto f_R = [&](double R) {
            return pressure_integrand_R(R, sc.shell, sc.inner_target, sc.material);
        };
        const double p_reference_form =
            integrate_adaptive(f_R, sc.shell.inner, sc.shell.outer).value;
        const testkit::TrapezoidResult oracle =
            testkit::trapezoid_pressure(sc.shell, sc.inner_target, sc.material, 1'000'000);
        const double denom = std::max(std::abs(report.pressure), 1e-300);
        const double dual_rel = std::abs(report.pressure - p_reference_form) / denom;
        const double oracle_rel = std::abs(report.pressure - oracle.value) / denom;

        table << "\n[" << sc.name << "]  reference " << sc.shell.inner << " -> " << sc.shell.outer
              << " m, inner face moved to " << sc.inner_target << " m\n";
        std::snprintf(buf, sizeof buf, "  %-28s %12g\n", "computed pressure (Pa)", report.pressure);
        table << buf;
        std::snprintf(buf, sizeof buf, "  %-28s %12g  (sign %s)\n", "published pressure (no unit)",
                      sc.published_pressure,
                      (report.pressure > 0) == (sc.published_pressure > 0) ? "agrees"
                                                                           : "DISAGREES");
        table << buf;
        std::snprintf(buf, sizeof buf, "  %-28s %.9f\n", "computed outer radius (m)",
                      report.deformed.outer);
        table << buf;
        if (sc.published_outer) {
            std::snprintf(buf, sizeof buf, "  %-28s %.3f\n", "published outer radius (m)",
                          *sc.published_outer);
            table << buf;
        }
        std::snprintf(buf, sizeof buf, "  %-28s %12g\n", "wall volume change (m^3)",
                      report.delta_wall_volume);
        table << buf;
        std::snprintf(buf, sizeof buf, "  %-28s %.3g\n", "dual-form rel. difference", dual_rel);
        table << buf;
        std::snprintf(buf, sizeof buf, "  %-28s %.3g\n", "trapezoid-oracle rel. diff", oracle_rel);
        table << buf;

        summary["scenarios"].push_back({
            {"name", sc.name},
            {"computed_pressure", report.pressure},
            {"published_pressure", sc.published_pressure},
            {"sign_agrees", (report.pressure > 0) == (sc.published_pressure > 0)},
            {"computed_outer_radius", report.deformed.outer},
            {"published_outer_radius",
             sc.published_outer ? json(*sc.published_outer) : json(nullptr)},
            {"delta_wall_volume", report.delta_wall_volume},
            {"dual_form_relative_difference", dual_rel},
            {"trapezoid_oracle_relative_difference", oracle_rel},
        });

        for (const std::string& f : sc.flags)
            flags.push_back(f);

        if (out_dir != nullptr) {
            const auto path = *out_dir / (sc.name + "_report.json");
            write_json_file(report_to_json(report), path);
        }
    }

    table << "\nFlags:\n";
    for (const std::string& f : flags)
        table << "  - " << f << "\n";
    summary["flags"] = flags;

    PaperComparison out{table.str(), std::move(summary)};
    if (out_dir != nullptr) {
        write_text_file(out.table, *out_dir / "comparison.txt");
        write_json_file(out.summary, *out_dir / "comparison.json");
        write_json_file(run_metadata(), *out_dir / "run_meta.json");
    }
    return out;
}

} // namespace iab
