#include "ohlab/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>

#include "ohlab/config.hpp"
#include "ohlab/errors.hpp"
#include "ohlab/experiments.hpp"
#include "ohlab/inviscid.hpp"
#include "ohlab/output.hpp"
#include "ohlab/snapshot.hpp"

namespace ohlab {

namespace {

struct CommonFlags {
    std::string config;
    std::string out;
    std::optional<int> cells;
    std::string eps;
    bool quiet = false;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--config", f.config, "flat key = value config file");
    cmd->add_option("--out", f.out, "output directory (overrides output.dir)");
    cmd->add_option("--n", f.cells, "cell count (overrides problem.cells)");
    cmd->add_option("--eps", f.eps, "epsilon list (overrides sweep.epsilons / problem.epsilon)");
    cmd->add_flag("--quiet", f.quiet, "print only the verdict");
}

ExperimentConfig resolve_config(const CommonFlags& f, bool eps_is_list) {
    KeyValues kv;
    if (!f.config.empty()) kv = load_key_values(f.config);
    if (f.cells) kv["problem.cells"] = std::to_string(*f.cells);
    if (!f.eps.empty()) {
        if (eps_is_list) {
            kv["sweep.epsilons"] = f.eps;
        } else {
            const std::vector<double> e = parse_number_list(f.eps);
            if (e.size() != 1) throw std::invalid_argument("--eps takes one value for this command");
            kv["problem.epsilon"] = f.eps;
        }
    }
    if (!f.out.empty()) kv["output.dir"] = f.out;
    return config_from_key_values(kv);
}

void print_report(std::ostream& out, const AuditReport& r) {
    for (const AuditCheck& c : r.checks) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%-4s %-24s value=%.6e bound=%.6e tol=%.3e",
                      c.pass ? "PASS" : "FAIL", c.name.c_str(), c.value, c.bound, c.tolerance);
        out << buf;
        if (!c.pass && c.witness) {
            std::snprintf(buf, sizeof buf, " at t=%.6g x=%.6g c=%.6g", c.witness->t, c.witness->x,
                          c.witness->c);
            out << buf;
        }
        out << '\n';
    }
}

int verdict(std::ostream& out, const AuditReport& r, bool quiet) {
    if (!quiet) print_report(out, r);
    out << (r.all_pass() ? "all checks passed\n" : "audit failed\n");
    return r.all_pass() ? kExitPass : kExitAuditFailure;
}

std::string join(const std::string& dir, const std::string& name) { return dir + "/" + name; }

nlohmann::json timing(const std::string& started, double runtime) {
    return {{"started_at", started}, {"finished_at", utc_timestamp()}, {"runtime_s", runtime}};
}

int cmd_solve(const CommonFlags& f, std::ostream& out) {
    const ExperimentConfig cfg = resolve_config(f, false);
    const std::string started = utc_timestamp();
    const SolveResult res = run_solve(cfg);
    const std::string& dir = cfg.output.dir;
    if (cfg.wants("snapshot")) {
        write_text_file(join(dir, "snapshot.jsonl"), snapshot_text(res.traj, config_echo(cfg)));
    }
    if (cfg.wants("csv")) write_text_file(join(dir, "diagnostics.csv"), diagnostics_csv(res.traj));
    if (cfg.wants("json")) write_text_file(join(dir, "audit.json"), to_json(res.audit).dump(2) + "\n");
    const nlohmann::json extra = {{"path", res.spec.epsilon > 0.0 ? "viscous" : "inviscid"},
                                  {"truncation_warning", res.traj.truncation_warning},
                                  {"g_lipschitz", res.spec.g.lipschitz()},
                                  {"audit", to_json(res.audit)}};
    write_text_file(join(dir, "manifest.json"),
                    manifest_json(cfg, "solve", timing(started, res.runtime_s), extra).dump(2) + "\n");
    if (res.traj.truncation_warning && !f.quiet) {
        out << "warning: solution is not negligible near x=L\n";
    }
    return verdict(out, res.audit, f.quiet);
}

int cmd_sweep(const CommonFlags& f, std::ostream& out) {
    const ExperimentConfig cfg = resolve_config(f, true);
    if (cfg.sweep.epsilons.size() < 3) {
        throw std::invalid_argument("sweep needs at least 3 epsilon values");
    }
    const std::string started = utc_timestamp();
    const auto t0 = std::chrono::steady_clock::now();
    const SweepReport rep = run_epsilon_sweep(cfg);
    const double rt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const std::string& dir = cfg.output.dir;
    if (cfg.wants("csv")) write_text_file(join(dir, "sweep.csv"), sweep_csv(rep));
    if (cfg.wants("json")) write_text_file(join(dir, "sweep.json"), sweep_json(rep).dump(2) + "\n");
    nlohmann::json runtimes = nlohmann::json::array();
    for (const SweepMember& m : rep.members) {
        runtimes.push_back({{"epsilon", m.epsilon}, {"runtime_s", m.runtime_s}});
    }
    nlohmann::json t = timing(started, rt);
    t["members"] = runtimes;
    t["inviscid_runtime_s"] = rep.inviscid_runtime_s;
    write_text_file(join(dir, "manifest.json"),
                    manifest_json(cfg, "sweep", t, sweep_json(rep)).dump(2) + "\n");
    if (!rep.complete()) out << "sweep aborted: " << rep.error << '\n';
    if (!f.quiet) {
        for (std::size_t k = 0; k < rep.members.size(); ++k) {
            out << "eps=" << format_number(rep.members[k].epsilon)
                << " d=" << (k < rep.d.size() ? format_number(rep.d[k]) : std::string("-"))
                << " e=" << (k < rep.e.size() ? format_number(rep.e[k]) : std::string("-")) << '\n';
        }
    }
    return verdict(out, rep.audit, f.quiet);
}

int cmd_stability(const CommonFlags& f, std::ostream& out) {
    const ExperimentConfig cfg = resolve_config(f, false);
    const std::string started = utc_timestamp();
    const auto t0 = std::chrono::steady_clock::now();
    const StabilityExperiment ex = run_stability_experiment(cfg);
    const double rt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const std::string& dir = cfg.output.dir;
    if (cfg.wants("csv")) write_text_file(join(dir, "stability.csv"), stability_csv(ex.result));
    if (cfg.wants("json")) {
        write_text_file(join(dir, "stability.json"), stability_json(ex).dump(2) + "\n");
    }
    write_text_file(join(dir, "manifest.json"),
                    manifest_json(cfg, "stability", timing(started, rt), stability_json(ex)).dump(2) +
                        "\n");
    return verdict(out, ex.audit, f.quiet);
}

int cmd_verify(const CommonFlags& f, const std::string& snapshot, std::ostream& out) {
    const ExperimentConfig cfg = resolve_config(f, false);
    const SnapshotFile file = read_snapshot(snapshot);
    const AuditReport r = audit_trajectory(file.trajectory, cfg.problem.cutoff_width, cfg.audit);
    return verdict(out, r, f.quiet);
}

int cmd_riemann(std::ostream& out) {
    const RiemannInput cases[] = {{0.5, 0.5}, {1.0, -1.0}, {-1.0, 1.0}};
    out << "uL,uR,flux\n";
    for (const RiemannInput& r : cases) {
        out << format_number(r.uL) << ',' << format_number(r.uR) << ','
            << format_number(godunov_flux(r)) << '\n';
    }
    return kExitPass;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Entropy solver and verifier for the Ostrovsky-Hunter equation on the half-line",
                 "ohlab"};
    app.require_subcommand(1);
    CommonFlags solve_f, sweep_f, stab_f, verify_f;
    std::string snapshot;
    CLI::App* solve = app.add_subcommand("solve", "one run; viscous if epsilon > 0");
    CLI::App* sweep = app.add_subcommand("sweep", "epsilon sweep against the inviscid run");
    CLI::App* stab = app.add_subcommand("stability", "L1 stability cone experiment");
    CLI::App* verify = app.add_subcommand("verify", "audit a stored snapshot");
    CLI::App* riemann = app.add_subcommand("riemann", "Godunov flux table");
    add_common(solve, solve_f);
    add_common(sweep, sweep_f);
    add_common(stab, stab_f);
    add_common(verify, verify_f);
    verify->add_option("snapshot", snapshot, "snapshot file")->required();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        if (*solve) return cmd_solve(solve_f, out);
        if (*sweep) return cmd_sweep(sweep_f, out);
        if (*stab) return cmd_stability(stab_f, out);
        if (*verify) return cmd_verify(verify_f, snapshot, out);
        if (*riemann) return cmd_riemann(out);
    } catch (const LoadError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "run failed: " << e.what() << '\n';
        return kExitAuditFailure;
    }
    err << app.help();
    return kExitUsage;
}

int cli_main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return cli_main(args, std::cout, std::cerr);
}

}  // namespace ohlab
