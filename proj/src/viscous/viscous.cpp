#include "ohlab/viscous.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ohlab/errors.hpp"

namespace ohlab {

namespace {

double burgers(double u) { return 0.5 * u * u; }

void require_finite(std::span<const double> v, double t, const char* where) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!std::isfinite(v[i])) {
            std::ostringstream os;
            os << "non-finite value in " << where << " at t=" << t << ", cell " << i;
            throw BlowUpError(t, static_cast<int>(i), os.str());
        }
    }
}

// Builds a field from a raw vector, converting a non-finite entry into BlowUpError.
ScalarField checked_field(const Grid1D& grid, std::vector<double> v, double t, const char* where) {
    require_finite(v, t, where);
    return ScalarField(grid, std::move(v));
}

double p_integral(const ScalarField& p) {
    double s = 0.0;
    for (double x : p.values()) s += x;
    return s * p.grid().dx();
}

}  // namespace

double cfl_dt(const ScalarField& u, double eps, double dx, double c_cfl) {
    if (!(dx > 0.0)) throw std::invalid_argument("cfl_dt needs dx > 0");
    double dt = dx / std::max(norm_linf(u), 1e-12);
    if (eps > 0.0) dt = std::min(dt, dx * dx / (2.0 * eps));
    return c_cfl * dt;
}

double llf_flux(double a, double b) {
    const double alpha = std::max(std::abs(a), std::abs(b));
    return 0.5 * (burgers(a) + burgers(b)) - 0.5 * alpha * (b - a);
}

ScalarField viscous_rhs(const ScalarField& u, const ScalarField& p, double gamma, double eps,
                        double g, double t) {
    const std::size_t n = u.size();
    const double dx = u.grid().dx();
    std::vector<double> r(n);
    double left = llf_flux(g, u[0]);
    for (std::size_t i = 0; i < n; ++i) {
        const double ui = u[i];
        const double ur = i + 1 < n ? u[i + 1] : ui;
        const double ul = i > 0 ? u[i - 1] : 2.0 * g - ui;
        const double right = llf_flux(ui, ur);
        r[i] = -(right - left) / dx + eps * (ur - 2.0 * ui + ul) / (dx * dx) + gamma * p[i];
        left = right;
    }
    return checked_field(u.grid(), std::move(r), t, "viscous right-hand side");
}

ScalarField viscous_rhs(const ViscousState& state, double gamma, double eps,
                        const BoundarySignal& g) {
    return viscous_rhs(state.u, state.p.p, gamma, eps, g(state.t), state.t);
}

ViscousState make_viscous_state(ScalarField u, double eps, double t, long step) {
    EllipticSolution p = solve_regularized(u, eps);
    return {t, std::move(u), std::move(p), step};
}

double dxu0_one_sided(const ScalarField& u, double g) {
    return (9.0 * u[0] - u[1] - 8.0 * g) / (3.0 * u.grid().dx());
}

StampDiagnostics viscous_diagnostics(const ScalarField& u, const EllipticSolution& p, double eps,
                                     double g) {
    StampDiagnostics d;
    d.u_l1 = norm_l1(u);
    d.u_l2 = norm_l2(u);
    d.u_linf = norm_linf(u);
    d.p_l1 = norm_l1(p.p);
    d.p_l2 = norm_l2(p.p);
    d.p_linf = norm_linf(p.p);
    d.dxp0 = p.dxp0;
    d.eps_dxp0 = eps * p.dxp0;
    d.dxu0 = dxu0_one_sided(u, g);
    d.p_integral = p_integral(p.p);
    d.tail = tail_value(u);
    return d;
}

Trajectory run_viscous(const ProblemSpec& spec, const std::vector<double>& stamps,
                       const ViscousOptions& options) {
    if (!(spec.epsilon > 0.0)) throw std::invalid_argument("run_viscous needs epsilon > 0");
    require_admissible(spec);
    if (stamps.empty()) throw std::invalid_argument("run_viscous needs at least one stamp");
    for (std::size_t k = 0; k < stamps.size(); ++k) {
        if (stamps[k] < 0.0 || stamps[k] > spec.final_time * (1.0 + 1e-12) ||
            (k > 0 && stamps[k] <= stamps[k - 1])) {
            throw std::invalid_argument("stamps must increase within [0, final_time]");
        }
    }

    const double eps = spec.epsilon;
    const double dx = spec.grid.dx();
    const double tail_bound = kTruncationTolerance * norm_linf(spec.u0);
    Trajectory traj(spec.grid);
    traj.gamma = spec.gamma;
    traj.epsilon = eps;

    ViscousState s = make_viscous_state(spec.u0, eps, 0.0);
    auto record = [&](double t) {
        const double gt = spec.g(t);
        StampDiagnostics d = viscous_diagnostics(s.u, s.p, eps, gt);
        if (d.tail > tail_bound) {
            if (options.abort_on_truncation) {
                std::ostringstream os;
                os << "solution reached x=L (tail " << d.tail << ") at t=" << t;
                throw StepFailure(os.str());
            }
            traj.truncation_warning = true;
        }
        traj.append(t, s.u, s.p.p, gt, gt, d);
    };

    for (double target : stamps) {
        while (target - s.t > kMinTimeStep * std::max(1.0, target)) {
            const double dt_cfl = cfl_dt(s.u, eps, dx, options.c_cfl);
            if (dt_cfl < kMinTimeStep) {
                std::ostringstream os;
                os << "time step " << dt_cfl << " below floor at t=" << s.t;
                throw StepFailure(os.str());
            }
            const double dt = std::min(dt_cfl, target - s.t);
            const std::size_t n = s.u.size();

            const ScalarField k1 = viscous_rhs(s, spec.gamma, eps, spec.g);
            std::vector<double> stage(n);
            for (std::size_t i = 0; i < n; ++i) stage[i] = s.u[i] + dt * k1[i];
            ViscousState mid = make_viscous_state(
                checked_field(spec.grid, std::move(stage), s.t + dt, "first stage"), eps, s.t + dt);

            const ScalarField k2 = viscous_rhs(mid, spec.gamma, eps, spec.g);
            std::vector<double> next(n);
            for (std::size_t i = 0; i < n; ++i) {
                next[i] = 0.5 * s.u[i] + 0.5 * (mid.u[i] + dt * k2[i]);
            }
            const double t_next = dt == target - s.t ? target : s.t + dt;
            s = make_viscous_state(checked_field(spec.grid, std::move(next), t_next, "step"), eps,
                                   t_next, s.step + 1);
        }
        s.t = target;
        record(target);
    }
    return traj;
}

ScalarField homogenized_view(const ViscousState& state, const CutoffChi& chi, double g) {
    std::vector<double> v(state.u.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = state.u[i] - g * chi.chi[i];
    return ScalarField(state.u.grid(), std::move(v));
}

}  // namespace ohlab
