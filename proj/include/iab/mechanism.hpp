#pragma once

#include <string>
#include <vector>

#include "iab/solver.hpp"

namespace iab {

/// Largest inner-surface displacement a correction command may request, in m.
inline constexpr double kMaxCommandDisplacement = 0.005;

enum class Axis { left_right, anterior_posterior };
enum class Group { side, base };

const char* axis_name(Axis a) noexcept;
const char* group_name(Group g) noexcept;

/// One actuator of the head-support array: where it sits, which axis it
/// corrects, and which direction it pushes when inflated (orientation +1
/// toward the axis positive end, -1 toward the negative end).
struct IabPlacement {
    std::string id;
    Group group;
    Axis axis;
    int orientation;
    ReferenceShell shell;
    MaterialParams material;
};

/// Requested head translation along one correction axis, in meters.
struct CorrectionCommand {
    Axis axis;
    double displacement;

    CorrectionCommand(Axis a, double displacement_m);
};

/// The stock array: four side units on the left-right axis and four base
/// units on the anterior-posterior axis, two of each orientation, all with
/// 2.75 cm inner / 3 cm outer shells.
std::vector<IabPlacement> default_placements();
std::vector<IabPlacement> default_placements(const ReferenceShell& shell,
                                             const MaterialParams& material);

/// Enforces the array shape rules: exactly 8 units, unique ids, each group on
/// its own axis with balanced orientations. Throws DomainError on violation.
void validate_placements(const std::vector<IabPlacement>& placements);

/// Target inner radius per actuator, placement order: units aligned with the
/// commanded push inflate by |displacement|, antagonists deflate by the same
/// amount, the off-axis group holds its reference radius.
std::vector<double> command_to_targets(const CorrectionCommand& cmd,
                                       const std::vector<IabPlacement>& placements);

struct IabSolve {
    std::string id;
    double target_inner;
    SolveReport report;
};

/// Solves every actuator at its target radius, in placement order. Identical
/// inputs produce bit-identical results to solving each unit on its own.
std::vector<IabSolve> solve_pressure_set(const std::vector<IabPlacement>& placements,
                                         const std::vector<double>& targets,
                                         const SolveOptions& opt = {});

/// command_to_targets followed by solve_pressure_set.
std::vector<IabSolve> apply_command(const std::vector<IabPlacement>& placements,
                                    const CorrectionCommand& cmd, const SolveOptions& opt = {});

} // namespace iab
