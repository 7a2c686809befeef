#include "iab/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "iab/units.hpp"

namespace iab {

using nlohmann::json;

const char* run_mode_name(RunMode mode) noexcept {
    switch (mode) {
    case RunMode::inverse: return "inverse";
    case RunMode::forward: return "forward";
    case RunMode::profile: return "profile";
    case RunMode::mechanism: return "mechanism";
    }
    return "unknown";
}

SolveOptions ScenarioConfig::solve_options() const {
    SolveOptions opt;
    opt.quad = quad;
    opt.bc.atmospheric = atmospheric;
    opt.profile_samples = samples;
    return opt;
}

namespace {

void reject_unknown_keys(const json& obj, const std::string& where,
                         const std::set<std::string>& known) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (!known.contains(key))
            throw ConfigError("unknown key '" + key + "' in " + where);
    }
}

const json* find(const json& obj, const std::string& key) {
    const auto it = obj.find(key);
    return it == obj.end() ? nullptr : &*it;
}

std::string require_string(const json& obj, const std::string& where, const std::string& key) {
    const json* v = find(obj, key);
    if (v == nullptr)
        throw ConfigError("missing required field '" + key + "' in " + where);
    if (!v->is_string())
        throw ConfigError("field '" + key + "' in " + where +
                          " must be a \"<number> <unit>\" string");
    return v->get<std::string>();
}

double number_field(const json& obj, const std::string& where, const std::string& key,
                    double fallback) {
    const json* v = find(obj, key);
    if (v == nullptr)
        return fallback;
    if (!v->is_number())
        throw ConfigError("field '" + key + "' in " + where + " must be a number");
    return v->get<double>();
}

long integer_field(const json& obj, const std::string& where, const std::string& key,
                   long fallback) {
    const json* v = find(obj, key);
    if (v == nullptr)
        return fallback;
    if (!v->is_number_integer())
        throw ConfigError("field '" + key + "' in " + where + " must be an integer");
    return v->get<long>();
}

MaterialParams parse_material(const json& obj) {
    if (!obj.is_object())
        throw ConfigError("'material' must be an object");
    reject_unknown_keys(obj, "'material'", {"C1", "C2", "density", "poisson"});
    const double c1 = parse_pressure(require_string(obj, "'material'", "C1"), "material.C1");
    const double c2 = parse_pressure(require_string(obj, "'material'", "C2"), "material.C2");
    double density = 0.1;
    if (const json* v = find(obj, "density")) {
        if (!v->is_string())
            throw ConfigError("field 'density' in 'material' must be a "
                              "\"<number> <unit>\" string");
        density = parse_density(v->get<std::string>(), "material.density");
    }
    const double poisson = number_field(obj, "'material'", "poisson", 0.45);
    try {
        return MaterialParams(c1, c2, density, poisson);
    } catch (const DomainError& e) {
        throw ConfigError(std::string("'material': ") + e.what());
    }
}

ReferenceShell parse_reference(const json& obj) {
    if (!obj.is_object())
        throw ConfigError("'reference' must be an object");
    reject_unknown_keys(obj, "'reference'", {"inner_radius", "outer_radius"});
    const double inner =
        parse_length(require_string(obj, "'reference'", "inner_radius"), "reference.inner_radius");
    const double outer =
        parse_length(require_string(obj, "'reference'", "outer_radius"), "reference.outer_radius");
    try {
        return ReferenceShell(inner, outer);
    } catch (const DomainError& e) {
        throw ConfigError(std::string("'reference': ") + e.what());
    }
}

CorrectionCommand parse_command(const json& obj) {
    if (!obj.is_object())
        throw ConfigError("'command' must be an object");
    reject_unknown_keys(obj, "'command'", {"axis", "displacement"});
    const json* axis = find(obj, "axis");
    if (axis == nullptr || !axis->is_string())
        throw ConfigError("'command.axis' must be \"left-right\" or \"anterior-posterior\"");
    const std::string name = axis->get<std::string>();
    Axis parsed;
    if (name == "left-right")
        parsed = Axis::left_right;
    else if (name == "anterior-posterior")
        parsed = Axis::anterior_posterior;
    else
        throw ConfigError("'command.axis': unknown axis \"" + name + "\"");
    const double displacement =
        parse_length(require_string(obj, "'command'", "displacement"), "command.displacement");
    try {
        return CorrectionCommand(parsed, displacement);
    } catch (const DomainError& e) {
        throw ConfigError(std::string("'command': ") + e.what());
    }
}

OutputSpec parse_output(const json& obj) {
    if (!obj.is_object())
        throw ConfigError("'output' must be an object");
    reject_unknown_keys(obj, "'output'",
                        {"report", "profile", "mesh", "mesh_latitudes", "mesh_longitudes"});
    OutputSpec out;
    if (const json* v = find(obj, "report")) {
        if (!v->is_string())
            throw ConfigError("'output.report' must be a filename string");
        out.report = v->get<std::string>();
    }
    if (const json* v = find(obj, "profile")) {
        if (!v->is_string())
            throw ConfigError("'output.profile' must be a filename string");
        out.profile = v->get<std::string>();
    }
    if (const json* v = find(obj, "mesh")) {
        if (!v->is_boolean())
            throw ConfigError("'output.mesh' must be a boolean");
        out.mesh = v->get<bool>();
    }
    out.mesh_latitudes = static_cast<int>(integer_field(obj, "'output'", "mesh_latitudes", 32));
    out.mesh_longitudes = static_cast<int>(integer_field(obj, "'output'", "mesh_longitudes", 64));
    if (out.mesh_latitudes < 4 || out.mesh_longitudes < 8)
        throw ConfigError("'output': mesh resolution must be at least 4 x 8");
    return out;
}

} // namespace

ScenarioConfig parse_config(const std::string& json_text, RunMode mode,
                            const std::string& source) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(source + ": not valid JSON: " + e.what());
    }
    if (!root.is_object())
        throw ConfigError(source + ": top level must be a JSON object");
    reject_unknown_keys(root, source,
                        {"mode", "material", "reference", "target_inner_radius", "target_pressure",
                         "command", "samples", "atmospheric", "quadrature", "output"});

    if (const json* v = find(root, "mode")) {
        if (!v->is_string() || v->get<std::string>() != run_mode_name(mode))
            throw ConfigError(source + ": config declares mode '" +
                              (v->is_string() ? v->get<std::string>() : std::string("?")) +
                              "' but the " + run_mode_name(mode) + " subcommand was invoked");
    }

    const bool is_mechanism = mode == RunMode::mechanism;
    const json* material_obj = find(root, "material");
    const json* reference_obj = find(root, "reference");
    if (!is_mechanism && material_obj == nullptr)
        throw ConfigError(source + ": missing required field 'material'");
    if (!is_mechanism && reference_obj == nullptr)
        throw ConfigError(source + ": missing required field 'reference'");

    MaterialParams material =
        material_obj != nullptr ? parse_material(*material_obj) : MaterialParams(1.1e4, 2.2e4);
    ReferenceShell reference =
        reference_obj != nullptr ? parse_reference(*reference_obj) : ReferenceShell(0.0275, 0.03);

    ScenarioConfig cfg(mode, material, reference);

    switch (mode) {
    case RunMode::inverse:
    case RunMode::profile:
        cfg.target_inner = parse_length(require_string(root, source, "target_inner_radius"),
                                        "target_inner_radius");
        break;
    case RunMode::forward:
        cfg.target_pressure =
            parse_pressure(require_string(root, source, "target_pressure"), "target_pressure");
        break;
    case RunMode::mechanism: {
        const json* cmd = find(root, "command");
        if (cmd == nullptr)
            throw ConfigError(source + ": mechanism mode requires a 'command' object");
        cfg.command = parse_command(*cmd);
        break;
    }
    }

    const long samples = integer_field(root, source, "samples", 128);
    if (samples < 2 || samples > 1'000'000)
        throw ConfigError(source + ": 'samples' must lie in [2, 1000000]");
    cfg.samples = static_cast<int>(samples);

    if (const json* v = find(root, "atmospheric")) {
        if (!v->is_string())
            throw ConfigError("'atmospheric' must be a \"<number> <unit>\" pressure string");
        cfg.atmospheric = parse_pressure(v->get<std::string>(), "atmospheric");
    }

    if (const json* v = find(root, "quadrature")) {
        if (!v->is_object())
            throw ConfigError("'quadrature' must be an object");
        reject_unknown_keys(*v, "'quadrature'", {"abs_tol", "rel_tol", "max_depth"});
        cfg.quad.abs_tol = number_field(*v, "'quadrature'", "abs_tol", cfg.quad.abs_tol);
        cfg.quad.rel_tol = number_field(*v, "'quadrature'", "rel_tol", cfg.quad.rel_tol);
        cfg.quad.max_depth =
            static_cast<int>(integer_field(*v, "'quadrature'", "max_depth", cfg.quad.max_depth));
        if (!(cfg.quad.abs_tol > 0.0) || !(cfg.quad.rel_tol > 0.0) || cfg.quad.max_depth < 4)
            throw ConfigError("'quadrature': tolerances must be positive, max_depth at least 4");
    }

    if (const json* v = find(root, "output"))
        cfg.output = parse_output(*v);

    return cfg;
}

ScenarioConfig load_config(const std::filesystem::path& path, RunMode mode) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str(), mode, path.string());
}

} // namespace iab
