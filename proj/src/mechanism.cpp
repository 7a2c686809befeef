#include "iab/mechanism.hpp"

#include <cmath>
#include <set>
#include <sstream>

namespace iab {

const char* axis_name(Axis a) noexcept {
    return a == Axis::left_right ? "left-right" : "anterior-posterior";
}

const char* group_name(Group g) noexcept {
    return g == Group::side ? "side" : "base";
}

CorrectionCommand::CorrectionCommand(Axis a, double displacement_m)
    : axis(a), displacement(displacement_m) {
    if (!std::isfinite(displacement) || std::abs(displacement) > kMaxCommandDisplacement) {
        std::ostringstream msg;
        msg << "command displacement " << displacement_m << " m exceeds the +-"
            << kMaxCommandDisplacement << " m envelope";
        throw DomainError(msg.str());
    }
}

std::vector<IabPlacement> default_placements() {
    return default_placements(ReferenceShell(0.0275, 0.03), MaterialParams(1.1e4, 2.2e4));
}

std::vector<IabPlacement> default_placements(const ReferenceShell& shell,
                                             const MaterialParams& material) {
    std::vector<IabPlacement> out;
    out.reserve(8);
    for (int k = 0; k < 4; ++k) {
        const int orientation = k < 2 ? 1 : -1;
        out.push_back(IabPlacement{"side-" + std::to_string(k + 1), Group::side, Axis::left_right,
                                   orientation, shell, material});
    }
    for (int k = 0; k < 4; ++k) {
        const int orientation = k < 2 ? 1 : -1;
        out.push_back(IabPlacement{"base-" + std::to_string(k + 1), Group::base,
                                   Axis::anterior_posterior, orientation, shell, material});
    }
    validate_placements(out);
    return out;
}

void validate_placements(const std::vector<IabPlacement>& placements) {
    if (placements.size() != 8)
        throw DomainError("mechanism requires exactly 8 actuator placements");
    std::set<std::string> ids;
    int count[2] = {0, 0};
    int balance[2] = {0, 0};
    for (const IabPlacement& p : placements) {
        if (!ids.insert(p.id).second)
            throw DomainError("duplicate actuator id: " + p.id);
        if (p.orientation != 1 && p.orientation != -1)
            throw DomainError("actuator orientation must be +1 or -1: " + p.id);
        const Axis expected =
            p.group == Group::side ? Axis::left_right : Axis::anterior_posterior;
        if (p.axis != expected)
            throw DomainError("actuator " + p.id + " sits in the " + group_name(p.group) +
                              " group but corrects the " + axis_name(p.axis) + " axis");
        const int g = p.group == Group::side ? 0 : 1;
        ++count[g];
        balance[g] += p.orientation;
    }
    if (count[0] != 4 || count[1] != 4)
        throw DomainError("mechanism requires 4 side and 4 base actuators");
    if (balance[0] != 0 || balance[1] != 0)
        throw DomainError("each group needs two actuators per orientation");
}

std::vector<double> command_to_targets(const CorrectionCommand& cmd,
                                       const std::vector<IabPlacement>& placements) {
    validate_placements(placements);
    std::vector<double> targets;
    targets.reserve(placements.size());
    const double magnitude = std::abs(cmd.displacement);
    for (const IabPlacement& p : placements) {
        double target = p.shell.inner;
        if (p.axis == cmd.axis && cmd.displacement != 0.0) {
            const bool aligned = (cmd.displacement > 0.0) == (p.orientation > 0);
            target = aligned ? p.shell.inner + magnitude : p.shell.inner - magnitude;
        }
        targets.push_back(target);
    }
    return targets;
}

std::vector<IabSolve> solve_pressure_set(const std::vector<IabPlacement>& placements,
                                         const std::vector<double>& targets,
                                         const SolveOptions& opt) {
    validate_placements(placements);
    if (targets.size() != placements.size())
        throw DomainError("target list length must match placement count");
    std::vector<IabSolve> out;
    out.reserve(placements.size());
    for (std::size_t k = 0; k < placements.size(); ++k) {
        const IabPlacement& p = placements[k];
        out.push_back(IabSolve{p.id, targets[k],
                               internal_pressure(p.shell, targets[k], p.material, opt)});
    }
    return out;
}

std::vector<IabSolve> apply_command(const std::vector<IabPlacement>& placements,
                                    const CorrectionCommand& cmd, const SolveOptions& opt) {
    return solve_pressure_set(placements, command_to_targets(cmd, placements), opt);
}

} // namespace iab
