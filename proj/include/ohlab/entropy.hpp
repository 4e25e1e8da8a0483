#pragma once

#include <vector>

#include "ohlab/report.hpp"
#include "ohlab/trajectory.hpp"

namespace ohlab {

/// Equally spaced Kruzhkov constants on [-M, M]; an odd count keeps c = 0 on the grid.
struct KruzhkovConstantGrid {
    double bound = 0.0;
    double spacing = 0.0;
    std::vector<double> values;

    static KruzhkovConstantGrid uniform(double bound, int intervals = 64);
    /// M = sup_k ||u(t_k)||_inf + sup_k |g(t_k)|.
    static KruzhkovConstantGrid for_trajectory(const Trajectory& traj, int intervals = 64);
};

inline double sign_of(double v) { return static_cast<double>((v > 0.0) - (v < 0.0)); }

/// |u - c| and sgn(u - c)(u^2/2 - c^2/2).
inline double kruzhkov_entropy(double u, double c) { return u > c ? u - c : c - u; }
inline double kruzhkov_flux(double u, double c) {
    return sign_of(u - c) * (0.5 * u * u - 0.5 * c * c);
}

/// Boundary entropy flux sgn(g - c)(tau^2/2 - c^2/2).
inline double boundary_entropy_flux(double trace, double g, double c) {
    return sign_of(g - c) * (0.5 * trace * trace - 0.5 * c * c);
}

struct EntropyOptions {
    double K = 0.25;       // tolerance K (dx + dt_out), calibrated on the 1 -> 0 shock
    int min_half_width = 8;  // hat half-width in cells
};

/// Hat half-width m = max(min_half_width, ceil(2 M dt_out / dx)).
int entropy_hat_half_width(double dx, double dt_out, double bound, int min_half_width);

/// Cell residuals between stamps k and k+1 for one constant c:
/// forward difference of |u - c|, trapezoidal entropy-flux difference (Godunov
/// interface states inside, boundary entropy flux on x = 0, q(u_{N-1}) on x = L)
/// and trapezoidal source gamma sgn(u - c) P.
std::vector<double> entropy_cell_residual(const Trajectory& traj, std::size_t k, double c);

/// Max positive part of sum_i R_i phi_j(x_i) dx over stamps, hats phi_j and
/// constants. Throws std::invalid_argument if the stamps are not uniform.
AuditCheck entropy_residual(const Trajectory& traj, const KruzhkovConstantGrid& cgrid,
                            const EntropyOptions& options = {});

}  // namespace ohlab
