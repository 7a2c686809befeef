#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "iab/mechanism.hpp"
#include "iab/solver.hpp"

namespace iab {

enum class RunMode { inverse, forward, profile, mechanism };

const char* run_mode_name(RunMode mode) noexcept;

struct OutputSpec {
    std::string report = "report.json";
    std::string profile = "profile.csv";
    bool mesh = false;
    int mesh_latitudes = 32;
    int mesh_longitudes = 64;
};

/// Fully parsed scenario. Dimensioned inputs arrive as "<number> <unit>"
/// strings in the JSON config and are stored here in SI units.
struct ScenarioConfig {
    RunMode mode;
    MaterialParams material;
    ReferenceShell reference;
    double target_inner = 0.0;    // inverse and profile modes
    double target_pressure = 0.0; // forward mode
    std::optional<CorrectionCommand> command; // mechanism mode
    int samples = 128;
    double atmospheric = 0.0;
    QuadratureOptions quad{};
    OutputSpec output{};

    ScenarioConfig(RunMode run_mode, MaterialParams mat, ReferenceShell ref)
        : mode(run_mode), material(mat), reference(ref) {}

    SolveOptions solve_options() const;
};

/// Parses and validates a config file for the given subcommand mode. Throws
/// ConfigError with the offending field named; never partially succeeds.
ScenarioConfig load_config(const std::filesystem::path& path, RunMode mode);

/// Same, from an in-memory JSON string (`source` labels error messages).
ScenarioConfig parse_config(const std::string& json_text, RunMode mode,
                            const std::string& source = "<inline>");

} // namespace iab
