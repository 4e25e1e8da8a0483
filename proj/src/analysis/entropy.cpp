#include "ohlab/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ohlab/inviscid.hpp"

namespace ohlab {

KruzhkovConstantGrid KruzhkovConstantGrid::uniform(double bound, int intervals) {
    if (!(bound >= 0.0) || intervals < 2 || intervals % 2 != 0) {
        throw std::invalid_argument("constant grid needs bound >= 0 and an even interval count");
    }
    KruzhkovConstantGrid g;
    g.bound = bound;
    g.spacing = 2.0 * bound / intervals;
    g.values.resize(static_cast<std::size_t>(intervals) + 1);
    for (int i = 0; i <= intervals; ++i) {
        g.values[static_cast<std::size_t>(i)] = i == intervals / 2 ? 0.0 : -bound + i * g.spacing;
    }
    g.values.back() = bound;
    return g;
}

KruzhkovConstantGrid KruzhkovConstantGrid::for_trajectory(const Trajectory& traj, int intervals) {
    double gmax = 0.0;
    for (double g : traj.boundary) gmax = std::max(gmax, std::abs(g));
    return uniform(traj.u_sup() + gmax, intervals);
}

int entropy_hat_half_width(double dx, double dt_out, double bound, int min_half_width) {
    const double cells = std::ceil(2.0 * bound * dt_out / dx);
    return std::max(min_half_width, static_cast<int>(std::min(cells, 1e6)));
}

namespace {

// Entropy flux on every face j = 0..N (face j sits at x = j dx) for one stamp.
void face_fluxes(const ScalarField& u, double trace, double g, double c, std::vector<double>& q) {
    const std::size_t n = u.size();
    q.resize(n + 1);
    q[0] = boundary_entropy_flux(trace, g, c);
    for (std::size_t j = 1; j < n; ++j) {
        q[j] = kruzhkov_flux(godunov_state({u[j - 1], u[j]}), c);
    }
    q[n] = kruzhkov_flux(u[n - 1], c);
}

}  // namespace

std::vector<double> entropy_cell_residual(const Trajectory& traj, std::size_t k, double c) {
    if (k + 1 >= traj.size()) throw std::out_of_range("entropy residual needs stamps k and k+1");
    const ScalarField& u0 = traj.u[k];
    const ScalarField& u1 = traj.u[k + 1];
    const ScalarField& p0 = traj.p[k];
    const ScalarField& p1 = traj.p[k + 1];
    const double dt = traj.times[k + 1] - traj.times[k];
    const double dx = traj.grid.dx();
    const std::size_t n = u0.size();

    std::vector<double> qa, qb;
    face_fluxes(u0, traj.trace[k], traj.boundary[k], c, qa);
    face_fluxes(u1, traj.trace[k + 1], traj.boundary[k + 1], c, qb);

    std::vector<double> r(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double dt_term = (kruzhkov_entropy(u1[i], c) - kruzhkov_entropy(u0[i], c)) / dt;
        const double flux = 0.5 * ((qa[i + 1] - qa[i]) + (qb[i + 1] - qb[i])) / dx;
        const double source =
            0.5 * traj.gamma * (sign_of(u0[i] - c) * p0[i] + sign_of(u1[i] - c) * p1[i]);
        r[i] = dt_term + flux - source;
    }
    return r;
}

AuditCheck entropy_residual(const Trajectory& traj, const KruzhkovConstantGrid& cgrid,
                            const EntropyOptions& options) {
    traj.validate();
    const double dt_out = traj.uniform_spacing();
    const double dx = traj.grid.dx();
    const int n = traj.grid.cells();
    const int m = entropy_hat_half_width(dx, dt_out, cgrid.bound, options.min_half_width);

    // Hat weights phi(d) = 1 - |d|/m for |d| < m.
    std::vector<double> w(static_cast<std::size_t>(2 * m - 1));
    for (int d = -(m - 1); d <= m - 1; ++d) {
        w[static_cast<std::size_t>(d + m - 1)] = 1.0 - std::abs(d) / static_cast<double>(m);
    }

    double worst = 0.0;
    Witness where;
    for (std::size_t k = 0; k + 1 < traj.size(); ++k) {
        for (double c : cgrid.values) {
            const std::vector<double> r = entropy_cell_residual(traj, k, c);
            for (int j = 0; j < n; ++j) {
                double s = 0.0;
                const int lo = std::max(0, j - (m - 1));
                const int hi = std::min(n - 1, j + (m - 1));
                for (int i = lo; i <= hi; ++i) {
                    s += r[static_cast<std::size_t>(i)] * w[static_cast<std::size_t>(i - j + m - 1)];
                }
                s *= dx;
                if (s > worst) {
                    worst = s;
                    where = {traj.times[k], traj.grid.center(j), c};
                }
            }
        }
    }

    AuditCheck check;
    check.name = "entropy_residual";
    check.value = worst;
    check.bound = 0.0;
    check.tolerance = options.K * (dx + dt_out);
    check.pass = worst <= check.tolerance;
    check.cells = n;
    check.dx = dx;
    check.dt_out = dt_out;
    if (worst > 0.0) check.witness = where;
    std::ostringstream os;
    os << "K=" << options.K << " hat_half_width=" << m << " constants=" << cgrid.values.size();
    check.detail = os.str();
    return check;
}

}  // namespace ohlab
