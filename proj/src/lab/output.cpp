#include "ohlab/output.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ohlab {

using nlohmann::json;

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12e", v);
    return buf;
}

std::string sweep_csv(const SweepReport& rep) {
    std::ostringstream os;
    os << "epsilon,d_k,e_k\n";
    for (std::size_t k = 0; k < rep.members.size(); ++k) {
        os << format_number(rep.members[k].epsilon) << ',';
        if (k < rep.d.size()) os << format_number(rep.d[k]);
        os << ',';
        if (k < rep.e.size()) os << format_number(rep.e[k]);
        os << '\n';
    }
    return os.str();
}

std::string stability_csv(const StabilityResult& res) {
    std::ostringstream os;
    os << "t,lhs,rhs,ratio\n";
    for (const StabilityRow& r : res.rows) {
        os << format_number(r.t) << ',' << format_number(r.lhs) << ',' << format_number(r.rhs)
           << ',' << format_number(r.ratio) << '\n';
    }
    return os.str();
}

std::string diagnostics_csv(const Trajectory& traj) {
    std::ostringstream os;
    os << "t,trace,g,u_l1,u_l2,u_linf,p_l1,p_l2,p_linf,dxp0,eps_dxp0,dxu0,p_integral,tail\n";
    for (std::size_t k = 0; k < traj.size(); ++k) {
        const StampDiagnostics& d = traj.diagnostics[k];
        for (double v : {traj.times[k], traj.trace[k], traj.boundary[k], d.u_l1, d.u_l2, d.u_linf,
                         d.p_l1, d.p_l2, d.p_linf, d.dxp0, d.eps_dxp0, d.dxu0, d.p_integral}) {
            os << format_number(v) << ',';
        }
        os << format_number(d.tail) << '\n';
    }
    return os.str();
}

json to_json(const AuditCheck& c) {
    json j = {{"name", c.name},   {"value", c.value}, {"bound", c.bound},
              {"tolerance", c.tolerance}, {"pass", c.pass},   {"cells", c.cells},
              {"dx", c.dx},       {"dt_out", c.dt_out}, {"detail", c.detail}};
    if (c.witness) j["witness"] = {{"t", c.witness->t}, {"x", c.witness->x}, {"c", c.witness->c}};
    return j;
}

json to_json(const AuditReport& r) {
    json checks = json::array();
    for (const AuditCheck& c : r.checks) checks.push_back(to_json(c));
    return {{"all_pass", r.all_pass()}, {"checks", checks}};
}

json config_echo(const ExperimentConfig& cfg) {
    auto preset = [](const PresetRef& p) { return json{{"name", p.name}, {"params", p.params}}; };
    return {{"problem",
             {{"gamma", cfg.problem.gamma},
              {"length", cfg.problem.length},
              {"cells", cfg.problem.cells},
              {"final_time", cfg.problem.final_time},
              {"epsilon", cfg.problem.epsilon},
              {"cutoff_width", cfg.problem.cutoff_width},
              {"relaxed", cfg.problem.relaxed},
              {"u0", preset(cfg.problem.u0)},
              {"v0", preset(cfg.problem.v0)},
              {"g", preset(cfg.problem.g)}}},
            {"scheme",
             {{"c_cfl", cfg.scheme.c_cfl},
              {"splitting", to_string(cfg.scheme.splitting)},
              {"flux", cfg.scheme.flux},
              {"trace_order", cfg.scheme.trace_order},
              {"abort_on_truncation", cfg.scheme.abort_on_truncation}}},
            {"sweep", {{"epsilons", cfg.sweep.epsilons}, {"parallel", cfg.sweep.parallel}}},
            {"audit",
             {{"K", cfg.audit.K},
              {"constant_intervals", cfg.audit.constant_intervals},
              {"bln_tol", cfg.audit.bln_tol},
              {"stability_tol", cfg.audit.stability_tol},
              {"stability_R", cfg.stability_window()},
              {"contraction_tol", cfg.audit.contraction_tol},
              {"sweep_ratio", cfg.audit.sweep_ratio},
              {"monotone_slack", cfg.audit.monotone_slack}}},
            {"output",
             {{"dir", cfg.output.dir}, {"stamps", cfg.output.stamps}, {"formats", cfg.output.formats}}}};
}

json sweep_json(const SweepReport& rep) {
    json members = json::array();
    for (const SweepMember& m : rep.members) {
        members.push_back({{"epsilon", m.epsilon},
                           {"p_sup", m.p_sup},
                           {"u_sup", m.traj.u_sup()},
                           {"truncation_warning", m.traj.truncation_warning},
                           {"apriori", to_json(m.apriori)}});
    }
    json j = {{"epsilons", rep.epsilons}, {"window", rep.window}, {"d", rep.d},
              {"e", rep.e},   {"members", members},   {"audit", to_json(rep.audit)},
              {"complete", rep.complete()}};
    if (!rep.complete()) j["error"] = rep.error;
    if (rep.inviscid) {
        j["inviscid"] = {{"u_sup", rep.inviscid->u_sup()},
                         {"truncation_warning", rep.inviscid->truncation_warning}};
    }
    return j;
}

json stability_json(const StabilityExperiment& ex) {
    json rows = json::array();
    for (const StabilityRow& r : ex.result.rows) {
        rows.push_back({{"t", r.t}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"ratio", r.ratio},
                        {"contraction_rhs", r.contraction_rhs}});
    }
    return {{"cone", {{"R", ex.result.cone.R}, {"T", ex.result.cone.T}, {"speed", ex.result.cone.speed}}},
            {"ordered", ex.ordered},
            {"rows", rows},
            {"audit", to_json(ex.audit)}};
}

json manifest_json(const ExperimentConfig& cfg, const std::string& command, const json& timing,
                   const json& extra) {
    json design = {
        {"elliptic_right_closure", "neumann dP/dx(L)=0"},
        {"elliptic_left_closure", "quadratic ghost P(0)=0"},
        {"elliptic_upwind_fallback", "first-order upwind when eps < dx/2"},
        {"primitive_rule", "trapezoidal accumulation anchored at x=0"},
        {"viscous_flux", "local lax-friedrichs, interface speed max(|a|,|b|)"},
        {"viscous_time_integrator", "ssp-rk2 (heun), P re-solved every stage"},
        {"viscous_right_ghost", "zero-gradient"},
        {"truncation_policy", cfg.scheme.abort_on_truncation ? "abort" : "warn"},
        {"truncation_tolerance", 1e-6},
        {"inviscid_flux", cfg.scheme.flux},
        {"inviscid_left_boundary", "godunov flux against ghost state g(t)"},
        {"splitting", to_string(cfg.scheme.splitting)},
        {"trace_order", cfg.scheme.trace_order},
        {"c_cfl", cfg.scheme.c_cfl},
        {"entropy_K", cfg.audit.K},
        {"entropy_time_rule", "forward difference of |u-c|; flux and source trapezoidal in time"},
        {"constant_grid", "dc = 2M/" + std::to_string(cfg.audit.constant_intervals)},
        {"bln_endpoints", "interval endpoints and c=0 inserted exactly"},
        {"boundary_mollification", "none; sampled g used directly"},
    };
    return {{"tool", "ohlab"},
            {"command", command},
            {"design", design},
            {"config", config_echo(cfg)},
            {"timing", timing},
            {"results", extra}};
}

void write_text_file(const std::string& path, const std::string& text) {
    const std::filesystem::path p(path);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream out(p, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
    if (!out) throw std::runtime_error("short write to '" + path + "'");
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace ohlab
