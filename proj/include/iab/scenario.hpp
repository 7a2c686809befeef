#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "iab/config.hpp"

namespace iab {

struct RunArtifacts {
    nlohmann::json report;
    std::vector<std::filesystem::path> written;
};

/// Executes one configured scenario and writes its artifacts (report JSON,
/// profile CSV, optional meshes, metadata sidecar) under out_dir, creating
/// the directory if needed. Returns the main report plus every path written.
RunArtifacts run_scenario(const ScenarioConfig& cfg, const std::filesystem::path& out_dir);

/// Reference experiments from the publication this model reproduces.
struct PublishedScenario {
    std::string name;
    ReferenceShell shell;
    double inner_target;
    MaterialParams material;
    double published_pressure;             // as printed; unit scale is ambiguous
    std::optional<double> published_outer; // printed deformed outer radius, if any
    std::vector<std::string> flags;        // data-quality notes for the output
};

PublishedScenario published_expansion();
PublishedScenario published_compression();

struct PaperComparison {
    std::string table;       // human-readable comparison plus flags
    nlohmann::json summary;  // same content, machine-readable
};

/// Runs both published experiments, compares computed values against the
/// printed ones, and cross-checks the solver against the testkit oracle
/// (dual-form integral agreement and the brute-force trapezoid pressure).
/// Writes the table and reports under out_dir when given.
PaperComparison reproduce_published(const std::filesystem::path* out_dir);

} // namespace iab
