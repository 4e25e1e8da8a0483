#include "ohlab/apriori.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ohlab/cutoff.hpp"
#include "ohlab/elliptic.hpp"

namespace ohlab {

namespace {

AuditCheck make_check(const char* name, const Trajectory& traj, double tol) {
    AuditCheck c;
    c.name = name;
    c.tolerance = tol;
    c.cells = traj.grid.cells();
    c.dx = traj.grid.dx();
    if (traj.size() >= 2) c.dt_out = traj.times[1] - traj.times[0];
    return c;
}

// Centred difference in time; one-sided at the two ends.
std::vector<double> time_derivative(const std::vector<double>& t, const std::vector<double>& f) {
    const std::size_t n = t.size();
    std::vector<double> d(n, 0.0);
    if (n < 2) return d;
    d[0] = (f[1] - f[0]) / (t[1] - t[0]);
    d[n - 1] = (f[n - 1] - f[n - 2]) / (t[n - 1] - t[n - 2]);
    for (std::size_t k = 1; k + 1 < n; ++k) d[k] = (f[k + 1] - f[k - 1]) / (t[k + 1] - t[k - 1]);
    return d;
}

double sqr(double x) { return x * x; }

}  // namespace

GrowthFit fit_l2_growth(const std::vector<double>& times, const std::vector<double>& v_l2_squared) {
    std::vector<double> ts, ys;
    for (std::size_t k = 0; k < times.size(); ++k) {
        if (v_l2_squared[k] > 1e-300) {
            ts.push_back(times[k]);
            ys.push_back(std::log(v_l2_squared[k] / (1.0 + times[k])));
        }
    }
    GrowthFit fit;
    fit.points = static_cast<int>(ts.size());
    if (ts.empty()) return fit;
    const double n = static_cast<double>(ts.size());
    double st = 0, sy = 0, stt = 0, sty = 0;
    for (std::size_t k = 0; k < ts.size(); ++k) {
        st += ts[k];
        sy += ys[k];
        stt += ts[k] * ts[k];
        sty += ts[k] * ys[k];
    }
    const double den = n * stt - st * st;
    fit.b = den > 0.0 ? (n * sty - st * sy) / den : 0.0;
    fit.a = (sy - fit.b * st) / n;
    fit.max_excess = -INFINITY;
    for (std::size_t k = 0; k < ts.size(); ++k) {
        fit.max_excess = std::max(fit.max_excess, ys[k] - (fit.a + fit.b * ts[k]));
    }
    return fit;
}

AuditReport apriori_suite(const Trajectory& traj, const ProblemSpec& spec,
                          const AprioriTolerances& tol) {
    if (!(traj.epsilon > 0.0)) throw std::invalid_argument("a priori suite needs a viscous run");
    if (traj.diagnostics.size() != traj.size() || traj.size() == 0) {
        throw std::invalid_argument("a priori suite needs diagnostics at every stamp");
    }
    if (!(traj.grid == spec.grid)) throw std::invalid_argument("trajectory and spec grids differ");
    traj.validate();

    const double eps = traj.epsilon;
    const double gamma = traj.gamma;
    const std::size_t K = traj.size();
    const std::size_t last = static_cast<std::size_t>(traj.grid.cells() - 1);
    const double p_sup = traj.p_sup();
    double g_sup = 0.0;
    for (double g : traj.boundary) g_sup = std::max(g_sup, std::abs(g));
    const double base = std::max(norm_linf(spec.u0), g_sup);
    const CutoffChi chi = make_cutoff(spec.grid, spec.cutoff_width);

    AuditCheck l2 = make_check("l2_identity", traj, tol.l2_identity);
    AuditCheck mass = make_check("mass_identity", traj, tol.mass_identity);
    AuditCheck linf = make_check("linf_bound", traj, tol.linf_bound);
    AuditCheck grad = make_check("gradient_bound", traj, tol.gradient_bound);
    AuditCheck stored = make_check("stored_p", traj, tol.stored_p);
    linf.value = mass.value = l2.value = grad.value = stored.value = 0.0;
    linf.value = -INFINITY;
    grad.value = -INFINITY;

    std::vector<double> v2(K), lhs(K), dxp(K), pl(K), rhs_static(K), trunc_static(K);
    for (std::size_t k = 0; k < K; ++k) {
        const double t = traj.times[k];
        const ScalarField& u = traj.u[k];
        const EllipticSolution sol = solve_regularized(u, eps);

        const double u2 = sqr(norm_l2(u));
        const double d_l2 = std::abs(check_l2_identity(u, sol, eps));
        const double rel = u2 > 0.0 ? d_l2 / u2 : d_l2;
        if (rel > l2.value) {
            l2.value = rel;
            l2.witness = Witness{t, 0.0, 0.0};
        }

        const double d_mass = std::abs(check_mass_identity(u, sol, eps));
        if (d_mass > mass.value) {
            mass.value = d_mass;
            mass.witness = Witness{t, 0.0, 0.0};
        }

        const double excess_inf = norm_linf(u) - (base + gamma * p_sup * t);
        if (excess_inf > linf.value) {
            linf.value = excess_inf;
            double best = -1.0;
            for (std::size_t i = 0; i < u.size(); ++i) {
                if (std::abs(u[i]) > best) {
                    best = std::abs(u[i]);
                    linf.witness = Witness{t, traj.grid.center(static_cast<int>(i)), 0.0};
                }
            }
        }

        const double excess_grad = std::sqrt(eps) * max_abs_gradient(sol) - std::sqrt(u2);
        if (excess_grad > grad.value) {
            grad.value = excess_grad;
            grad.witness = Witness{t, 0.0, 0.0};
        }

        double sdiff = 0.0;
        for (std::size_t i = 0; i < u.size(); ++i) {
            sdiff = std::max(sdiff, std::abs(sol.p[i] - traj.p[k][i]));
        }
        const double srel = sdiff / (1.0 + norm_linf(sol.p));
        if (srel > stored.value) {
            stored.value = srel;
            stored.witness = Witness{t, 0.0, 0.0};
        }

        const double g = traj.boundary[k];
        double vv = 0.0;
        for (std::size_t i = 0; i < u.size(); ++i) vv += sqr(u[i] - g * chi.chi[i]);
        v2[k] = vv * traj.grid.dx();

        const StampDiagnostics& d = traj.diagnostics[k];
        lhs[k] = gamma * d.p_integral;
        dxp[k] = eps * d.dxp0;
        pl[k] = traj.p[k][last];
        rhs_static[k] = eps * d.dxu0 - 0.5 * g * g;
        trunc_static[k] = rhs_static[k] + 0.5 * sqr(u[last]);
    }

    l2.pass = l2.value <= tol.l2_identity;
    l2.detail = "value is |defect| / ||u||^2";
    mass.pass = mass.value <= tol.mass_identity;
    linf.bound = 0.0;
    linf.pass = linf.value <= tol.linf_bound;
    {
        std::ostringstream os;
        os << "value is max ||u||_inf - (" << base << " + gamma*" << p_sup << "*t)";
        linf.detail = os.str();
    }
    grad.pass = grad.value <= tol.gradient_bound;
    grad.detail = "value is sqrt(eps) max|P'| - ||u||_2";
    stored.pass = stored.value <= tol.stored_p;

    AuditCheck growth = make_check("l2_growth", traj, tol.growth_log);
    const GrowthFit fit = fit_l2_growth(traj.times, v2);
    growth.value = fit.points > 0 ? fit.max_excess : 0.0;
    growth.pass = growth.value <= tol.growth_log;
    {
        std::ostringstream os;
        os << "A=" << std::exp(fit.a) << " B=" << fit.b << " points=" << fit.points;
        growth.detail = os.str();
    }

    AuditCheck flim = make_check("f_limit", traj, tol.f_limit);
    AuditCheck ftrunc = make_check("f_limit_truncated", traj, tol.f_limit);
    if (K >= 3) {
        const std::vector<double> ddxp = time_derivative(traj.times, dxp);
        const std::vector<double> dpl = time_derivative(traj.times, pl);
        for (std::size_t k = 0; k < K; ++k) {
            const double scale = 1.0 + std::abs(lhs[k]);
            const double half_line = std::abs(lhs[k] - (ddxp[k] + rhs_static[k])) / scale;
            const double truncated =
                std::abs(lhs[k] - (ddxp[k] + dpl[k] + trunc_static[k])) / scale;
            if (half_line > flim.value) {
                flim.value = half_line;
                flim.witness = Witness{traj.times[k], 0.0, 0.0};
            }
            if (truncated > ftrunc.value) {
                ftrunc.value = truncated;
                ftrunc.witness = Witness{traj.times[k], traj.grid.length(), 0.0};
            }
        }
        flim.detail = "relative to 1 + |gamma F|";
        ftrunc.detail = "relative to 1 + |gamma F|; adds d/dt P(L) + u(L)^2/2";
    } else {
        flim.detail = ftrunc.detail = "skipped: fewer than 3 stamps";
    }
    flim.pass = flim.value <= tol.f_limit;
    ftrunc.pass = ftrunc.value <= tol.f_limit;

    AuditReport report;
    for (AuditCheck* c : {&l2, &mass, &linf, &grad, &growth, &flim, &ftrunc, &stored}) {
        ensure_witness(*c, Witness{traj.times.back(), 0.0, 0.0});
        report.add(std::move(*c));
    }
    return report;
}

AuditCheck p_sup_sweep_check(const std::vector<double>& epsilons, const std::vector<double>& p_sup,
                             double ratio_bound) {
    if (epsilons.size() != p_sup.size() || p_sup.empty()) {
        throw std::invalid_argument("sweep check needs one P bound per epsilon");
    }
    std::vector<double> sorted = p_sup;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t n = sorted.size();
    const double median = n % 2 ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
    const double mx = sorted.back();
    AuditCheck c;
    c.name = "p_sup_sweep";
    c.value = median > 0.0 ? mx / median : (mx > 0.0 ? INFINITY : 0.0);
    c.bound = ratio_bound;
    c.pass = c.value <= ratio_bound;
    const auto it = std::max_element(p_sup.begin(), p_sup.end());
    c.witness = Witness{0.0, 0.0, epsilons[static_cast<std::size_t>(it - p_sup.begin())]};
    c.detail = "value is max/median of sup ||P||_inf; witness c holds the worst epsilon";
    return c;
}

}  // namespace ohlab
