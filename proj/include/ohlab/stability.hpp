#pragma once

#include <optional>
#include <vector>

#include "ohlab/report.hpp"
#include "ohlab/trajectory.hpp"

namespace ohlab {

/// Backward cone with I(s) = [0, R + C (t - s)] for the stamp t.
struct StabilityCone {
    double R = 0.0;
    double T = 0.0;
    double speed = 0.0;  // C(T) = sup ||u||_inf + sup ||v||_inf
    double interval_end(double s, double t) const { return R + speed * (t - s); }
};

struct StabilityRow {
    double t = 0.0;
    double lhs = 0.0;  // ||u(t) - v(t)||_{L1(0,R)}
    double rhs = 0.0;  // e^{C t} ||u0 - v0||_{L1(0, R + C t)}
    double ratio = 0.0;
    double contraction_rhs = 0.0;  // ||u0 - v0||_{L1(0, R + C t)}
};

struct StabilityOptions {
    double tol = 0.05;
    bool check_contraction = false;
    double contraction_tol = 1e-3;  // relative slack on the plain L1 contraction
};

struct StabilityResult {
    StabilityCone cone;
    std::vector<StabilityRow> rows;  // one per stamp with t > 0
    AuditCheck check;                // worst ratio against 1 + tol
    std::optional<AuditCheck> contraction;
};

/// Both trajectories must share grid, stamps and boundary data, and start at t = 0.
/// Throws std::invalid_argument otherwise.
StabilityResult stability_compare(const Trajectory& u, const Trajectory& v, double R,
                                  const StabilityOptions& options = {});

}  // namespace ohlab
