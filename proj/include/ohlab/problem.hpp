#pragma once

#include <string>
#include <vector>

#include "ohlab/boundary.hpp"
#include "ohlab/field.hpp"
#include "ohlab/grid.hpp"

namespace ohlab {

/// Full definition of one initial-boundary value experiment.
struct ProblemSpec {
    double gamma;
    double epsilon;  // 0 selects the inviscid path
    Grid1D grid;
    ScalarField u0;
    BoundarySignal g;
    double final_time;
    double cutoff_width;
    bool relaxed = false;  // admits gamma = 0 and g(0) != 0 (Burgers validation runs)
};

struct Violation {
    std::string code;
    std::string message;
};

/// Violated assumptions plus the measured data bounds.
struct SpecValidation {
    std::vector<Violation> violations;
    double u0_l1 = 0.0;
    double u0_linf = 0.0;
    double p0_l2 = 0.0;
    /// |P0(L)| relative to max(1, ||P0||_inf); P0 in L2 on the half-line needs it ~ 0.
    double p0_tail = 0.0;
    double g_lipschitz = 0.0;
    double g_sup = 0.0;

    bool admissible() const { return violations.empty(); }
    bool has(const std::string& code) const;
};

/// Relative size of |P0(L)| above which the primitive is reported as not decaying.
inline constexpr double kPrimitiveTailTolerance = 1e-6;

SpecValidation validate_spec(const ProblemSpec& spec);

/// Throws std::invalid_argument listing every violation, if any.
void require_admissible(const ProblemSpec& spec);

}  // namespace ohlab
