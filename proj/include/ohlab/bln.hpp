#pragma once

#include <vector>

#include "ohlab/entropy.hpp"
#include "ohlab/report.hpp"
#include "ohlab/trajectory.hpp"

namespace ohlab {

/// Boundary trace u(t, 0+) paired with the datum g(t).
struct TraceSeries {
    std::vector<double> times;
    std::vector<double> trace;
    std::vector<double> g;

    static TraceSeries from_trajectory(const Trajectory& traj);
    /// Throws std::invalid_argument on length mismatch or non-finite entries.
    void validate() const;
};

/// min over c in the closed interval between tau and g of
/// sgn(tau - g)(tau^2/2 - c^2/2), on a dc-grid with both endpoints and c = 0
/// (when inside) inserted exactly. Returns the minimizing c through argmin.
double bln_minimum(double trace, double g, double dc, double* argmin = nullptr);

/// Most negative bln_minimum over the stamps; pass iff >= -tol.
AuditCheck bln_residual(const TraceSeries& tr, double dc, double tol = 1e-6);

/// (tau^2/2 - c^2/2)(sgn(tau - c) + sgn(c)).
double trace_product_form(double trace, double c);

/// Minimum of trace_product_form over the constant grid on every admissible
/// stamp (bln_minimum >= -bln_tol); pass iff >= -tol.
AuditCheck trace_product_check(const TraceSeries& tr, const KruzhkovConstantGrid& cgrid,
                               double dc, double bln_tol, double tol = 1e-12);

}  // namespace ohlab
