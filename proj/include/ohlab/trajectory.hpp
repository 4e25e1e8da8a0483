#pragma once

#include <string>
#include <vector>

#include "ohlab/field.hpp"
#include "ohlab/grid.hpp"

namespace ohlab {

/// Scalar diagnostics recorded with every stored state.
struct StampDiagnostics {
    double u_l1 = 0.0;
    double u_l2 = 0.0;
    double u_linf = 0.0;
    double p_l1 = 0.0;
    double p_l2 = 0.0;
    double p_linf = 0.0;
    double dxp0 = 0.0;       // one-sided d/dx P at x = 0
    double eps_dxp0 = 0.0;   // epsilon * dxp0
    double dxu0 = 0.0;       // one-sided d/dx u at x = 0 (uses g on the face)
    double p_integral = 0.0; // F(t, L) = int_0^L P dx
    double tail = 0.0;       // max |u| over the last cells before x = L

    friend bool operator==(const StampDiagnostics&, const StampDiagnostics&) = default;
};

/// Time-stamped (u, P) pairs with the boundary trace and diagnostics.
struct Trajectory {
    Grid1D grid;
    double gamma = 0.0;
    double epsilon = 0.0;
    int trace_order = 1;
    std::vector<double> times;
    std::vector<ScalarField> u;
    std::vector<ScalarField> p;
    std::vector<double> trace;     // extrapolated u(t_k, 0+)
    std::vector<double> boundary;  // g(t_k)
    std::vector<StampDiagnostics> diagnostics;
    bool truncation_warning = false;

    explicit Trajectory(Grid1D g) : grid(g) {}

    std::size_t size() const { return times.size(); }
    void append(double t, ScalarField u_k, ScalarField p_k, double trace_k, double g_k,
                const StampDiagnostics& diag);

    /// Throws std::invalid_argument if the stamp/field invariants are broken.
    void validate() const;

    /// Spacing of uniform stamps; throws std::invalid_argument if not uniform.
    double uniform_spacing() const;

    /// sup over all stamps of ||u||_inf and ||P||_inf.
    double u_sup() const;
    double p_sup() const;

    friend bool operator==(const Trajectory&, const Trajectory&) = default;
};

/// Cells counted as "near x = L" by the tail diagnostic.
int tail_cells(const Grid1D& grid);
double tail_value(const ScalarField& u);

/// count >= 2 equally spaced stamps from 0 to T inclusive.
std::vector<double> uniform_stamps(double final_time, int count);

}  // namespace ohlab
