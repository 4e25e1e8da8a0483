#include "ohlab/inviscid.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ohlab/elliptic.hpp"
#include "ohlab/errors.hpp"
#include "ohlab/viscous.hpp"

namespace ohlab {

namespace {

ScalarField checked(const Grid1D& grid, std::vector<double> v, double t) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!std::isfinite(v[i])) {
            std::ostringstream os;
            os << "non-finite value after inviscid step at t=" << t << ", cell " << i;
            throw BlowUpError(t, static_cast<int>(i), os.str());
        }
    }
    return ScalarField(grid, std::move(v));
}

ScalarField convect(const ScalarField& u, double g, double dt, double t) {
    const std::size_t n = u.size();
    const double lambda = dt / u.grid().dx();
    std::vector<double> out(n);
    double left = godunov_flux({g, u[0]});
    for (std::size_t i = 0; i < n; ++i) {
        const double right = i + 1 < n ? godunov_flux({u[i], u[i + 1]}) : 0.5 * u[i] * u[i];
        out[i] = u[i] - lambda * (right - left);
        left = right;
    }
    return checked(u.grid(), std::move(out), t);
}

ScalarField add_source(const ScalarField& u, double gamma, double dt, double t) {
    if (gamma == 0.0) return u;
    const ScalarField p = integrate_primitive(u);
    std::vector<double> out(u.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = u[i] + dt * gamma * p[i];
    return checked(u.grid(), std::move(out), t);
}

}  // namespace

double godunov_state(RiemannInput r) {
    if (r.uL <= r.uR) {
        if (r.uL > 0.0) return r.uL;
        if (r.uR < 0.0) return r.uR;
        return 0.0;
    }
    return r.uL + r.uR >= 0.0 ? r.uL : r.uR;
}

double godunov_flux(RiemannInput r) {
    const double w = godunov_state(r);
    return 0.5 * w * w;
}

std::string to_string(Splitting s) { return s == Splitting::lie ? "lie" : "strang"; }

Splitting parse_splitting(const std::string& s) {
    if (s == "lie") return Splitting::lie;
    if (s == "strang") return Splitting::strang;
    throw std::invalid_argument("unknown splitting '" + s + "' (lie|strang)");
}

ScalarField step_inviscid(const ScalarField& u, double g, double gamma, double dt,
                          Splitting splitting, double t) {
    const double speed = std::max(norm_linf(u), std::abs(g));
    if (!(dt > 0.0) || dt * speed > u.grid().dx() * (1.0 + 1e-12)) {
        std::ostringstream os;
        os << "inviscid step violates CFL: dt=" << dt << ", speed=" << speed
           << ", dx=" << u.grid().dx();
        throw std::invalid_argument(os.str());
    }
    if (splitting == Splitting::lie) return add_source(convect(u, g, dt, t), gamma, dt, t);
    const ScalarField half = add_source(u, gamma, 0.5 * dt, t);
    return add_source(convect(half, g, dt, t), gamma, 0.5 * dt, t);
}

double trace_value(const ScalarField& u, int order) {
    if (order == 2 && u.size() >= 3) return (15.0 * u[0] - 10.0 * u[1] + 3.0 * u[2]) / 8.0;
    return 0.5 * (3.0 * u[0] - u[1]);
}

std::vector<double> trace_extract(const Trajectory& traj) {
    std::vector<double> out;
    out.reserve(traj.size());
    for (const ScalarField& u : traj.u) out.push_back(trace_value(u, traj.trace_order));
    return out;
}

StampDiagnostics inviscid_diagnostics(const ScalarField& u, const ScalarField& p, double trace) {
    StampDiagnostics d;
    d.u_l1 = norm_l1(u);
    d.u_l2 = norm_l2(u);
    d.u_linf = norm_linf(u);
    d.p_l1 = norm_l1(p);
    d.p_l2 = norm_l2(p);
    d.p_linf = norm_linf(p);
    d.dxp0 = trace;  // P' = u up to the boundary
    d.eps_dxp0 = 0.0;
    d.dxu0 = (u[1] - u[0]) / u.grid().dx();
    double s = 0.0;
    for (double x : p.values()) s += x;
    d.p_integral = s * p.grid().dx();
    d.tail = tail_value(u);
    return d;
}

Trajectory run_inviscid(const ProblemSpec& spec, const std::vector<double>& stamps,
                        const InviscidOptions& options) {
    if (spec.epsilon != 0.0) throw std::invalid_argument("run_inviscid needs epsilon = 0");
    if (options.trace_order != 1 && options.trace_order != 2) {
        throw std::invalid_argument("trace order must be 1 or 2");
    }
    require_admissible(spec);
    if (stamps.empty()) throw std::invalid_argument("run_inviscid needs at least one stamp");
    for (std::size_t k = 0; k < stamps.size(); ++k) {
        if (stamps[k] < 0.0 || stamps[k] > spec.final_time * (1.0 + 1e-12) ||
            (k > 0 && stamps[k] <= stamps[k - 1])) {
            throw std::invalid_argument("stamps must increase within [0, final_time]");
        }
    }

    const double dx = spec.grid.dx();
    const double tail_bound = kTruncationTolerance * norm_linf(spec.u0);
    const double g_sup = spec.g.sup();
    Trajectory traj(spec.grid);
    traj.gamma = spec.gamma;
    traj.epsilon = 0.0;
    traj.trace_order = options.trace_order;

    ScalarField u = spec.u0;
    double t = 0.0;
    for (double target : stamps) {
        while (target - t > kMinTimeStep * std::max(1.0, target)) {
            const double speed = std::max({norm_linf(u), g_sup, 1e-12});
            const double dt_cfl = options.c_cfl * dx / speed;
            if (dt_cfl < kMinTimeStep) {
                std::ostringstream os;
                os << "time step " << dt_cfl << " below floor at t=" << t;
                throw StepFailure(os.str());
            }
            const double dt = std::min(dt_cfl, target - t);
            u = step_inviscid(u, spec.g(t), spec.gamma, dt, options.splitting, t);
            t = dt == target - t ? target : t + dt;
        }
        t = target;
        ScalarField p = integrate_primitive(u);
        const double tr = trace_value(u, options.trace_order);
        StampDiagnostics d = inviscid_diagnostics(u, p, tr);
        if (d.tail > tail_bound) {
            if (options.abort_on_truncation) {
                std::ostringstream os;
                os << "solution reached x=L (tail " << d.tail << ") at t=" << t;
                throw StepFailure(os.str());
            }
            traj.truncation_warning = true;
        }
        traj.append(t, u, std::move(p), tr, spec.g(t), d);
    }
    return traj;
}

}  // namespace ohlab
