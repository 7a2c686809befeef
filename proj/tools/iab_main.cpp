// Command-line front end: scenario runs (inverse, forward, profile,
// mechanism) from a JSON config, plus the built-in published-experiment
// comparison. Exit codes: 0 success, 2 config error, 3 solver
// non-convergence, 4 domain error.
#include <cstdio>
#include <exception>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "iab/config.hpp"
#include "iab/kernels.hpp"
#include "iab/scenario.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNoConvergence = 3;
constexpr int kExitDomain = 4;

struct CommonArgs {
    std::string config_path;
    std::string out_dir = "out";
    std::optional<int> samples;
    std::optional<double> quad_rel_tol;
    std::string backend;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool needs_config) {
    auto* config = cmd->add_option("--config", args.config_path, "scenario config JSON file");
    if (needs_config)
        config->required();
    cmd->add_option("--out", args.out_dir, "output directory (default: out)");
    cmd->add_option("--samples", args.samples, "override the profile sample count");
    cmd->add_option("--quad-tol", args.quad_rel_tol,
                    "override the quadrature relative tolerance");
    cmd->add_option("--backend", args.backend, "force a kernel backend: scalar or avx2");
}

void apply_backend(const std::string& name) {
    if (name.empty())
        return;
    if (name == "scalar")
        iab::kernels::force_backend(iab::kernels::Backend::scalar);
    else if (name == "avx2")
        iab::kernels::force_backend(iab::kernels::Backend::avx2);
    else
        throw iab::ConfigError("unknown kernel backend: " + name);
}

int run_mode(const CommonArgs& args, iab::RunMode mode) {
    apply_backend(args.backend);
    iab::ScenarioConfig cfg = iab::load_config(args.config_path, mode);
    if (args.samples) {
        if (*args.samples < 2)
            throw iab::ConfigError("--samples must be at least 2");
        cfg.samples = *args.samples;
    }
    if (args.quad_rel_tol) {
        if (!(*args.quad_rel_tol > 0.0))
            throw iab::ConfigError("--quad-tol must be positive");
        cfg.quad.rel_tol = *args.quad_rel_tol;
    }
    const iab::RunArtifacts artifacts = iab::run_scenario(cfg, args.out_dir);
    for (const auto& path : artifacts.written)
        std::cout << "wrote " << path.string() << "\n";
    if (mode == iab::RunMode::inverse || mode == iab::RunMode::profile) {
        std::cout << "pressure: " << artifacts.report.at("pressure").get<double>() << " Pa\n";
    } else if (mode == iab::RunMode::forward) {
        std::cout << "inner radius: "
                  << artifacts.report.at("report").at("deformed").at("inner_radius").get<double>()
                  << " m\n";
        if (!artifacts.report.at("warning").is_null())
            std::cout << "warning: pressure is not monotone over the search bracket; candidate "
                         "roots listed in the report\n";
    } else {
        for (const auto& unit : artifacts.report.at("units"))
            std::cout << unit.at("id").get<std::string>() << ": "
                      << unit.at("report").at("pressure").get<double>() << " Pa\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"incompressible spherical air-bladder simulator"};
    app.require_subcommand(1);

    CommonArgs inverse_args, forward_args, profile_args, mechanism_args;
    CommonArgs reproduce_args;

    auto* inverse = app.add_subcommand(
        "inverse", "pressure required to place the inner face at a target radius");
    add_common(inverse, inverse_args, true);
    auto* forward =
        app.add_subcommand("forward", "deformed geometry produced by a target pressure");
    add_common(forward, forward_args, true);
    auto* profile = app.add_subcommand("profile", "radial stress profile through the wall");
    add_common(profile, profile_args, true);
    auto* mechanism = app.add_subcommand(
        "mechanism", "solve the 8-actuator head-support array for a correction command");
    add_common(mechanism, mechanism_args, true);
    auto* reproduce = app.add_subcommand(
        "reproduce-paper", "compare against the published reference experiments");
    reproduce->add_option("--out", reproduce_args.out_dir,
                          "also write the comparison and reports here");
    reproduce->add_option("--backend", reproduce_args.backend,
                          "force a kernel backend: scalar or avx2");
    bool reproduce_write = false;
    reproduce->add_flag("--write", reproduce_write, "write artifacts (off by default)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (inverse->parsed())
            return run_mode(inverse_args, iab::RunMode::inverse);
        if (forward->parsed())
            return run_mode(forward_args, iab::RunMode::forward);
        if (profile->parsed())
            return run_mode(profile_args, iab::RunMode::profile);
        if (mechanism->parsed())
            return run_mode(mechanism_args, iab::RunMode::mechanism);
        if (reproduce->parsed()) {
            apply_backend(reproduce_args.backend);
            const std::filesystem::path out = reproduce_args.out_dir;
            const iab::PaperComparison comparison =
                iab::reproduce_published(reproduce_write ? &out : nullptr);
            std::cout << comparison.table;
            return 0;
        }
    } catch (const iab::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const iab::ConvergenceError& e) {
        std::cerr << "solver error: " << e.what() << "\n";
        return kExitNoConvergence;
    } catch (const iab::DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
