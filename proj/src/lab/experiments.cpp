#include "ohlab/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <future>
#include <sstream>
#include <stdexcept>

#include "ohlab/apriori.hpp"
#include "ohlab/bln.hpp"
#include "ohlab/entropy.hpp"
#include "ohlab/inviscid.hpp"
#include "ohlab/presets.hpp"
#include "ohlab/viscous.hpp"

namespace ohlab {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

InviscidOptions inviscid_options(const ExperimentConfig& cfg) {
    InviscidOptions o;
    o.c_cfl = cfg.scheme.c_cfl;
    o.splitting = cfg.scheme.splitting;
    o.trace_order = cfg.scheme.trace_order;
    o.abort_on_truncation = cfg.scheme.abort_on_truncation;
    return o;
}

ViscousOptions viscous_options(const ExperimentConfig& cfg) {
    ViscousOptions o;
    o.c_cfl = cfg.scheme.c_cfl;
    o.abort_on_truncation = cfg.scheme.abort_on_truncation;
    return o;
}

// max_k x_{k+1} / x_k; pairs with both entries zero count as 0.
AuditCheck sequence_check(const char* name, const std::vector<double>& x, double slack,
                          bool strict) {
    AuditCheck c;
    c.name = name;
    c.bound = slack;
    double worst = 0.0;
    bool all_zero = std::all_of(x.begin(), x.end(), [](double v) { return v == 0.0; });
    bool pass = true;
    for (std::size_t k = 0; k + 1 < x.size(); ++k) {
        double r = 0.0;
        if (x[k] > 0.0) r = x[k + 1] / x[k];
        else if (x[k + 1] > 0.0) r = INFINITY;
        if (r >= worst) {
            worst = r;
            c.witness = Witness{0.0, 0.0, static_cast<double>(k + 1)};
        }
        if (strict ? !(x[k + 1] < x[k]) : !(x[k + 1] <= slack * x[k])) pass = false;
    }
    c.value = worst;
    c.pass = all_zero || pass;
    c.detail = std::string("value is max x[k+1]/x[k]; witness c is k+1") +
               (all_zero ? "; all distances vanish" : "");
    return c;
}

}  // namespace

AuditReport audit_inviscid(const Trajectory& traj, const ExperimentConfig::Audit& audit) {
    AuditReport r;
    const KruzhkovConstantGrid cgrid =
        KruzhkovConstantGrid::for_trajectory(traj, audit.constant_intervals);
    EntropyOptions eo;
    eo.K = audit.K;
    r.add(entropy_residual(traj, cgrid, eo));
    const double dc = cgrid.spacing > 0.0 ? cgrid.spacing : 1.0;
    const TraceSeries tr = TraceSeries::from_trajectory(traj);
    r.add(bln_residual(tr, dc, audit.bln_tol));
    r.add(trace_product_check(tr, cgrid, dc, audit.bln_tol));
    return r;
}

AuditReport audit_trajectory(const Trajectory& traj, double cutoff_width,
                             const ExperimentConfig::Audit& audit) {
    if (traj.epsilon == 0.0) return audit_inviscid(traj, audit);
    if (traj.size() == 0) throw std::invalid_argument("empty trajectory");
    const double horizon = std::max(traj.times.back(), 1e-12);
    std::vector<double> gs = traj.boundary;
    if (gs.size() < 2) gs.push_back(gs.back());
    const double step = traj.size() >= 2 ? traj.uniform_spacing() : horizon;
    const ProblemSpec spec{traj.gamma, traj.epsilon, traj.grid, traj.u[0],
                           BoundarySignal(gs, step), horizon, cutoff_width, true};
    return apriori_suite(traj, spec);
}

SolveResult run_solve(const ExperimentConfig& cfg) {
    cfg.validate();
    const auto t0 = std::chrono::steady_clock::now();
    ProblemSpec spec = make_problem(cfg, cfg.problem.epsilon);
    const std::vector<double> stamps = uniform_stamps(cfg.problem.final_time, cfg.output.stamps);
    Trajectory traj = spec.epsilon > 0.0 ? run_viscous(spec, stamps, viscous_options(cfg))
                                         : run_inviscid(spec, stamps, inviscid_options(cfg));
    AuditReport audit = spec.epsilon > 0.0 ? apriori_suite(traj, spec) : audit_inviscid(traj, cfg.audit);
    const double rt = seconds_since(t0);
    return {std::move(spec), std::move(traj), std::move(audit), rt};
}

SweepReport run_epsilon_sweep(const ExperimentConfig& cfg) {
    cfg.validate();
    if (cfg.sweep.epsilons.size() < 3) {
        throw std::invalid_argument("epsilon sweep needs at least 3 values");
    }
    SweepReport rep;
    rep.epsilons = cfg.sweep.epsilons;
    rep.window = 0.5 * cfg.problem.length;
    const std::vector<double> stamps = uniform_stamps(cfg.problem.final_time, cfg.output.stamps);

    auto viscous_job = [&](double eps) {
        const auto t0 = std::chrono::steady_clock::now();
        const ProblemSpec spec = make_problem(cfg, eps);
        SweepMember m;
        m.epsilon = eps;
        m.traj = run_viscous(spec, stamps, viscous_options(cfg));
        m.p_sup = m.traj.p_sup();
        m.apriori = apriori_suite(m.traj, spec);
        m.runtime_s = seconds_since(t0);
        return m;
    };
    auto inviscid_job = [&]() {
        const auto t0 = std::chrono::steady_clock::now();
        Trajectory t = run_inviscid(make_problem(cfg, 0.0), stamps, inviscid_options(cfg));
        return std::make_pair(std::move(t), seconds_since(t0));
    };

    const auto policy = cfg.sweep.parallel ? std::launch::async : std::launch::deferred;
    std::vector<std::future<SweepMember>> jobs;
    for (double eps : rep.epsilons) jobs.push_back(std::async(policy, viscous_job, eps));
    auto inv = std::async(policy, inviscid_job);

    for (std::size_t k = 0; k < jobs.size(); ++k) {
        try {
            SweepMember m = jobs[k].get();
            if (rep.error.empty()) rep.members.push_back(std::move(m));
        } catch (const std::exception& e) {
            if (rep.error.empty()) {
                std::ostringstream os;
                os << "viscous run at epsilon=" << rep.epsilons[k] << " failed: " << e.what();
                rep.error = os.str();
            }
        }
    }
    try {
        auto [t, rt] = inv.get();
        rep.inviscid = std::move(t);
        rep.inviscid_runtime_s = rt;
    } catch (const std::exception& e) {
        if (rep.error.empty()) rep.error = std::string("inviscid run failed: ") + e.what();
    }

    const double T = cfg.problem.final_time;
    auto at_final = [&](const Trajectory& t) -> const ScalarField& { return t.u.back(); };
    for (std::size_t k = 0; k + 1 < rep.members.size(); ++k) {
        rep.d.push_back(norm_l1_window(at_final(rep.members[k].traj) - at_final(rep.members[k + 1].traj),
                                       rep.window));
    }
    if (rep.inviscid) {
        for (const SweepMember& m : rep.members) {
            rep.e.push_back(norm_l1_window(at_final(m.traj) - at_final(*rep.inviscid), rep.window));
        }
    }

    const double slack = cfg.audit.monotone_slack;
    rep.audit.add(sequence_check("d_nonincreasing", rep.d, slack, false));
    rep.audit.add(sequence_check("e_nonincreasing", rep.e, slack, false));
    rep.audit.add(sequence_check("e_strictly_decreasing", rep.e, 1.0, true));
    if (!rep.members.empty()) {
        std::vector<double> eps, ps;
        for (const SweepMember& m : rep.members) {
            eps.push_back(m.epsilon);
            ps.push_back(m.p_sup);
        }
        rep.audit.add(p_sup_sweep_check(eps, ps, cfg.audit.sweep_ratio));
    }
    for (AuditCheck& c : rep.audit.checks) {
        c.cells = cfg.problem.cells;
        c.dx = cfg.problem.length / cfg.problem.cells;
        ensure_witness(c, Witness{T, 0.0, 0.0});
    }
    if (!rep.complete()) {
        AuditCheck c;
        c.name = "sweep_complete";
        c.pass = false;
        c.detail = rep.error;
        c.witness = Witness{T, 0.0, 0.0};
        rep.audit.add(c);
    }
    return rep;
}

StabilityExperiment run_stability_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    const double T = cfg.problem.final_time;
    const std::vector<double> stamps{0.0, 0.25 * T, 0.5 * T, 0.75 * T, T};
    const ProblemSpec su = make_problem(cfg, 0.0, cfg.problem.u0);
    const ProblemSpec sv = make_problem(cfg, 0.0, cfg.problem.v0);

    StabilityExperiment ex;
    ex.u = run_inviscid(su, stamps, inviscid_options(cfg));
    ex.v = run_inviscid(sv, stamps, inviscid_options(cfg));
    ex.ordered = true;
    for (std::size_t i = 0; i < su.u0.size(); ++i) {
        if (su.u0[i] > sv.u0[i]) ex.ordered = false;
    }
    StabilityOptions so;
    so.tol = cfg.audit.stability_tol;
    so.contraction_tol = cfg.audit.contraction_tol;
    so.check_contraction = cfg.problem.gamma == 0.0 && ex.ordered;
    ex.result = stability_compare(ex.u, ex.v, cfg.stability_window(), so);
    ex.audit.add(ex.result.check);
    if (ex.result.contraction) ex.audit.add(*ex.result.contraction);
    return ex;
}

}  // namespace ohlab
