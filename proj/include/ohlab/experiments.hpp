#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ohlab/config.hpp"
#include "ohlab/problem.hpp"
#include "ohlab/report.hpp"
#include "ohlab/stability.hpp"
#include "ohlab/trajectory.hpp"

namespace ohlab {

struct SweepMember {
    double epsilon = 0.0;
    Trajectory traj{Grid1D(1.0, Grid1D::kMinCells)};
    double p_sup = 0.0;
    double runtime_s = 0.0;
    AuditReport apriori;
};

struct SweepReport {
    std::vector<double> epsilons;       // as requested, decreasing
    std::vector<SweepMember> members;   // completed runs, same order
    std::optional<Trajectory> inviscid;
    double inviscid_runtime_s = 0.0;
    double window = 0.0;                // distances measured on (0, window)
    std::vector<double> d;              // ||u_k - u_{k+1}||, size n-1
    std::vector<double> e;              // ||u_k - u_inviscid||, size n
    AuditReport audit;
    std::string error;                  // first failure; members hold what completed

    bool complete() const { return error.empty(); }
};

/// One viscous run per epsilon plus one inviscid run, all at the config data.
/// Members run concurrently when cfg.sweep.parallel; results are reduced in
/// epsilon order. Throws std::invalid_argument for fewer than 3 epsilons. A
/// failing member does not throw: report.error is set and the distances cover
/// the completed prefix.
SweepReport run_epsilon_sweep(const ExperimentConfig& cfg);

struct StabilityExperiment {
    Trajectory u{Grid1D(1.0, Grid1D::kMinCells)};
    Trajectory v{Grid1D(1.0, Grid1D::kMinCells)};
    StabilityResult result;
    bool ordered = false;  // u0 <= v0 cellwise
    AuditReport audit;
};

/// Two inviscid runs (u0 and v0 presets, shared g) compared at 0, T/4, T/2,
/// 3T/4, T. The plain contraction is checked when gamma = 0 and u0 <= v0.
StabilityExperiment run_stability_experiment(const ExperimentConfig& cfg);

struct SolveResult {
    ProblemSpec spec;
    Trajectory traj;
    AuditReport audit;
    double runtime_s = 0.0;
};

/// Viscous run if problem.epsilon > 0, inviscid otherwise, with the audits
/// belonging to that path.
SolveResult run_solve(const ExperimentConfig& cfg);

/// Entropy, boundary and trace product audits of an inviscid trajectory.
AuditReport audit_inviscid(const Trajectory& traj, const ExperimentConfig::Audit& audit);

/// Audits a stored trajectory; the problem is rebuilt from the first stamp.
AuditReport audit_trajectory(const Trajectory& traj, double cutoff_width,
                             const ExperimentConfig::Audit& audit);

}  // namespace ohlab
