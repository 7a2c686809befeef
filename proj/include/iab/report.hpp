#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "iab/mechanism.hpp"
#include "iab/solver.hpp"

namespace iab {

/// JSON views of the solve results. Numbers round-trip losslessly:
/// report_from_json(report_to_json(x)) reproduces x bit for bit.
nlohmann::json report_to_json(const SolveReport& report);
SolveReport report_from_json(const nlohmann::json& j);

nlohmann::json forward_to_json(const ForwardResult& result);
nlohmann::json mechanism_to_json(const std::vector<IabSolve>& solves);

/// Profile table with header "R,r,sigma_rr,p", 17 significant digits.
std::string profile_to_csv(const std::vector<ProfileSample>& profile);

/// Serializes with a trailing newline; identical inputs yield byte-identical
/// files (no timestamps here; runtime metadata goes in its own sidecar).
void write_json_file(const nlohmann::json& j, const std::filesystem::path& path);
void write_text_file(const std::string& text, const std::filesystem::path& path);

/// Sidecar with the non-deterministic run context (timestamp, backend).
nlohmann::json run_metadata();

} // namespace iab
