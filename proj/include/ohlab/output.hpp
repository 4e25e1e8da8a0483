#pragma once

#include <string>

#include <json.hpp>

#include "ohlab/config.hpp"
#include "ohlab/experiments.hpp"
#include "ohlab/report.hpp"
#include "ohlab/stability.hpp"
#include "ohlab/trajectory.hpp"

namespace ohlab {

/// Fixed "%.12e" formatting, so equal doubles always print equally.
std::string format_number(double v);

/// epsilon,d_k,e_k (d_k is empty on the last row).
std::string sweep_csv(const SweepReport& rep);
/// t,lhs,rhs,ratio.
std::string stability_csv(const StabilityResult& res);
/// One row of StampDiagnostics per stamp, plus trace and g.
std::string diagnostics_csv(const Trajectory& traj);

nlohmann::json to_json(const AuditCheck& c);
nlohmann::json to_json(const AuditReport& r);
nlohmann::json config_echo(const ExperimentConfig& cfg);

/// Sweep results without wall-clock content.
nlohmann::json sweep_json(const SweepReport& rep);
nlohmann::json stability_json(const StabilityExperiment& ex);

/// Every scheme and audit design flag, the command, and the run timing.
nlohmann::json manifest_json(const ExperimentConfig& cfg, const std::string& command,
                             const nlohmann::json& timing, const nlohmann::json& extra);

/// Creates parent directories as needed.
void write_text_file(const std::string& path, const std::string& text);

/// "2026-10-14T12:00:00Z" for the current UTC time.
std::string utc_timestamp();

}  // namespace ohlab
