// Acceptance runner: one PASS/FAIL line per criterion.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "ohlab/config.hpp"
#include "ohlab/bln.hpp"
#include "ohlab/elliptic.hpp"
#include "ohlab/entropy.hpp"
#include "ohlab/errors.hpp"
#include "ohlab/experiments.hpp"
#include "ohlab/inviscid.hpp"
#include "ohlab/output.hpp"
#include "ohlab/presets.hpp"
#include "ohlab/snapshot.hpp"

using namespace ohlab;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

ExperimentConfig config(const std::string& text) { return config_from_key_values(parse_key_values(text)); }

// Manufactured pair P = x exp(-x), u = -eps P'' + P'.
constexpr double kMmsEps = 0.1;
double mms_p(double x) { return x * std::exp(-x); }
double mms_u(double x) { return std::exp(-x) * ((1.0 - x) - kMmsEps * (x - 2.0)); }

struct MmsRun {
    double err = 0.0;
    double l2_defect = 0.0;
    double u_l2sq = 0.0;
    double mass_defect = 0.0;
};

MmsRun mms(int n) {
    const Grid1D g(20.0, n);
    const ScalarField u = ScalarField::sample(g, mms_u);
    const EllipticSolution s = solve_regularized(u, kMmsEps);
    MmsRun r;
    for (int i = 0; i < n; ++i) {
        r.err = std::max(r.err, std::abs(s.p[static_cast<std::size_t>(i)] - mms_p(g.center(i))));
    }
    r.l2_defect = std::abs(check_l2_identity(u, s, kMmsEps));
    r.u_l2sq = norm_l2(u) * norm_l2(u);
    r.mass_defect = std::abs(check_mass_identity(u, s, kMmsEps));
    return r;
}

Outcome criterion1() {
    const MmsRun a = mms(256), b = mms(512), c = mms(1024);
    const double r1 = a.err / b.err, r2 = b.err / c.err;
    const bool ok = r1 >= 3.2 && r1 <= 4.8 && r2 >= 3.2 && r2 <= 4.8;
    return {ok, fmt("error ratios %.3f %.3f (N=1024 error %.3e)", r1, r2, c.err)};
}

Outcome criterion2() {
    const MmsRun a = mms(256), b = mms(512), c = mms(1024);
    const bool mono = b.l2_defect < a.l2_defect && c.l2_defect < b.l2_defect;
    const double rel = c.l2_defect / c.u_l2sq;
    return {mono && rel < 1e-3,
            fmt("defects %.3e %.3e %.3e", a.l2_defect, b.l2_defect, c.l2_defect) +
                fmt(", final relative %.3e", rel)};
}

Outcome criterion3() {
    const MmsRun m = mms(2048);
    const ExperimentConfig cfg = config("problem.epsilon = 0.05\n");
    const SolveResult res = run_solve(cfg);
    const AuditCheck& mass = res.audit.get("mass_identity");
    const bool ok = m.mass_defect < 1e-3 && mass.value < 1e-3;
    return {ok, fmt("manufactured N=2048 defect %.3e; bump run worst defect %.3e", m.mass_defect, mass.value) +
                    (mass.witness ? fmt(" at t=%.3f", mass.witness->t) : std::string())};
}

Outcome criterion4() {
    double worst = 0.0;
    for (double c : {-2.0, -0.5, 0.0, 0.3, 1.7}) worst = std::max(worst, std::abs(godunov_flux({c, c}) - 0.5 * c * c));
    worst = std::max(worst, std::abs(godunov_flux({1.0, -1.0}) - 0.5));
    worst = std::max(worst, std::abs(godunov_flux({-1.0, 1.0})));
    return {worst <= 1e-15, fmt("max flux error %.3e", worst)};
}

Outcome criterion5() {
    const ExperimentConfig zero_cfg = config("problem.cells = 1024\nproblem.epsilon = 0\nproblem.u0 = zero\n");
    const Trajectory zero = run_solve(zero_cfg).traj;
    const double r0 = entropy_residual(zero, KruzhkovConstantGrid::uniform(1.0)).value;

    const Grid1D g(20.0, 1024);
    const auto step = [](double x) { return x < 5.0 ? 1.0 : 0.0; };
    const ProblemSpec shock{0.0, 0.0, g, ScalarField::sample(g, step),
                            BoundarySignal(std::vector<double>{1.0, 1.0}, 1.0), 1.0, 5.0, true};
    const Trajectory st = run_inviscid(shock, uniform_stamps(1.0, 21));
    const AuditCheck sc = entropy_residual(st, KruzhkovConstantGrid::for_trajectory(st));
    const double bound = 0.25 * (g.dx() + st.uniform_spacing());

    // Stationary -1 | 1 jump: a weak solution of Burgers that violates the entropy condition.
    const ScalarField jump = ScalarField::sample(g, [](double x) { return x < 5.0 ? -1.0 : 1.0; });
    Trajectory bad(g);
    const ScalarField p = integrate_primitive(jump);
    for (double t : uniform_stamps(1.0, 21)) bad.append(t, jump, p, -1.0, -1.0, inviscid_diagnostics(jump, p, -1.0));
    const AuditCheck bc = entropy_residual(bad, KruzhkovConstantGrid::for_trajectory(bad));

    const bool ok = r0 == 0.0 && sc.value <= bound && !bc.pass;
    return {ok, fmt("zero %.1e; shock %.3e <= %.3e", r0, sc.value, bound) +
                    fmt("; expansion shock %.3e ", bc.value) + (bc.pass ? "passes" : "rejected")};
}

Outcome criterion6() {
    const double dc = 1.0 / 64;
    const double e1 = std::abs(bln_minimum(0.7, 0.7, dc));
    const double e2 = std::abs(bln_minimum(2.0, 1.0, dc));
    const double e3 = std::abs(bln_minimum(-1.0, 1.0, dc) + 0.5);
    bool ok = e1 <= 1e-6 && e2 <= 1e-6 && e3 <= 1e-6;
    std::string runs;
    for (const char* u0 : {"zero", "gauss_bump"}) {
        const ExperimentConfig cfg =
            config(std::string("problem.epsilon = 0\nproblem.g = ramp_hold\nproblem.u0 = ") + u0 + "\n");
        const AuditReport r = run_solve(cfg).audit;
        const bool run_ok = r.get("bln_residual").pass && r.get("trace_product_form").pass;
        ok = ok && run_ok;
        runs += std::string("; ") + u0 + (run_ok ? " ok" : " failed");
    }
    return {ok, fmt("case errors %.1e %.1e %.1e", e1, e2, e3) + runs};
}

Outcome criterion7() {
    const SolveResult res = run_solve(config("problem.epsilon = 0.05\n"));
    const AuditCheck& c = res.audit.get("linf_bound");
    return {c.pass, fmt("max excess over the bound %.3e (tol %.0e)", c.value, c.tolerance)};
}

SweepReport& sweep() {
    static SweepReport rep = run_epsilon_sweep(config({}));
    return rep;
}

Outcome criterion8() {
    const AuditCheck& c = sweep().audit.get("p_sup_sweep");
    std::string s = fmt("max/median %.4f", c.value);
    for (const SweepMember& m : sweep().members) s += fmt("; eps %.2f sup %.3f", m.epsilon, m.p_sup);
    return {c.pass && sweep().complete(), s};
}

Outcome criterion9() {
    const AuditCheck& c = sweep().audit.get("e_strictly_decreasing");
    std::string s = "e_k";
    for (double e : sweep().e) s += fmt(" %.4f", e);
    return {c.pass && sweep().complete(), s};
}

Outcome criterion10() {
    const StabilityExperiment a = run_stability_experiment(config({}));
    double worst = 0.0;
    for (const StabilityRow& r : a.result.rows) worst = std::max(worst, r.ratio);
    const StabilityExperiment b = run_stability_experiment(
        config("problem.gamma = 0\nproblem.relaxed = true\nproblem.u0.a = 0.5\nproblem.v0.x0 = 3\n"));
    const bool contraction = b.ordered && b.result.contraction && b.result.contraction->pass;
    const bool ok = a.result.rows.size() == 4 && worst <= 1.05 && contraction;
    return {ok, fmt("worst ratio %.3e over %g checkpoints; ", worst, static_cast<double>(a.result.rows.size())) +
                    (contraction ? fmt("contraction ratio %.6f <= 1 + %.0e", b.result.contraction->value, b.result.contraction->tolerance)
                                 : std::string("contraction check missing or failed"))};
}

Outcome criterion11() {
    const ExperimentConfig vis = config("problem.epsilon = 0.05\n");
    const ExperimentConfig inv = config("problem.epsilon = 0\n");
    bool same = true;
    for (const ExperimentConfig* cfg : {&vis, &inv}) {
        const SolveResult a = run_solve(*cfg), b = run_solve(*cfg);
        same = same && snapshot_text(a.traj, config_echo(*cfg)) == snapshot_text(b.traj, config_echo(*cfg)) &&
               diagnostics_csv(a.traj) == diagnostics_csv(b.traj) &&
               to_json(a.audit).dump() == to_json(b.audit).dump();
    }
    const Trajectory traj = run_solve(vis).traj;
    const std::string text = snapshot_text(traj, config_echo(vis));
    const bool lossless = parse_snapshot(text).trajectory == traj;

    const auto rejected = [](const std::string& s) {
        try {
            parse_snapshot(s);
        } catch (const LoadError&) {
            return true;
        }
        return false;
    };
    const bool corrupt = rejected(text.substr(0, text.size() * 2 / 3));
    std::istringstream in(text);
    std::string header;
    std::getline(in, header);
    nlohmann::json h = nlohmann::json::parse(header);
    h["schema_version"] = kSnapshotSchemaVersion + 1;
    const bool schema = rejected(h.dump() + "\n" + text.substr(header.size() + 1));
    return {same && lossless && corrupt && schema,
            std::string("repeat ") + (same ? "identical" : "differs") + ", round trip " +
                (lossless ? "lossless" : "lossy") + ", corrupt " + (corrupt ? "rejected" : "accepted") +
                ", schema mismatch " + (schema ? "rejected" : "accepted")};
}

const std::vector<std::pair<std::string, std::function<Outcome()>>> kCriteria = {
    {"elliptic manufactured convergence", criterion1},
    {"L2 identity defect", criterion2},
    {"mass identity", criterion3},
    {"Godunov Riemann cases", criterion4},
    {"entropy audit", criterion5},
    {"boundary condition audit", criterion6},
    {"L-infinity bound", criterion7},
    {"epsilon-independent sup of P", criterion8},
    {"viscous to inviscid convergence", criterion9},
    {"stability inequality", criterion10},
    {"determinism and persistence", criterion11},
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    int only = 0;
    app.add_option("--criterion", only, "run one criterion (1-11)")->check(CLI::Range(1, 11));
    CLI11_PARSE(app, argc, argv);

    bool all = true;
    for (std::size_t k = 0; k < kCriteria.size(); ++k) {
        if (only != 0 && static_cast<std::size_t>(only) != k + 1) continue;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = kCriteria[k].second();
        } catch (const std::exception& e) {
            o = {false, std::string("error: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s criterion %2zu %-34s %s [%.2f s]\n", o.pass ? "PASS" : "FAIL", k + 1,
                    kCriteria[k].first.c_str(), o.detail.c_str(), secs);
        all = all && o.pass;
    }
    return all ? 0 : 1;
}
