#pragma once

#include <vector>

#include "ohlab/problem.hpp"
#include "ohlab/report.hpp"
#include "ohlab/trajectory.hpp"

namespace ohlab {

struct AprioriTolerances {
    double l2_identity = 1e-3;   // relative to ||u||^2
    double mass_identity = 1e-3;
    double linf_bound = 1e-6;
    double gradient_bound = 1e-6;
    double growth_log = 1.0;     // slack on the affine fit of log ||v||^2
    double f_limit = 1e-2;       // relative to 1 + |gamma F|
    double stored_p = 1e-9;      // stored P against a fresh solve, relative
};

/// Affine least-squares fit log(||v||^2 / (1 + t)) ~ a + b t.
struct GrowthFit {
    double a = 0.0;
    double b = 0.0;
    double max_excess = 0.0;  // max over stamps of log value minus fit
    int points = 0;
};

GrowthFit fit_l2_growth(const std::vector<double>& times, const std::vector<double>& v_l2_squared);

/// Checks on a viscous trajectory:
///   l2_identity, mass_identity, linf_bound, gradient_bound, l2_growth,
///   f_limit (half-line form), f_limit_truncated (adds the x = L flux and
///   d/dt P(L) terms), stored_p.
/// Throws std::invalid_argument if the trajectory is inviscid, lacks
/// diagnostics, or lives on a different grid than spec.
AuditReport apriori_suite(const Trajectory& traj, const ProblemSpec& spec,
                          const AprioriTolerances& tol = {});

/// max/median of sup_t ||P||_inf over an epsilon sweep; pass iff <= ratio_bound.
AuditCheck p_sup_sweep_check(const std::vector<double>& epsilons, const std::vector<double>& p_sup,
                             double ratio_bound = 2.0);

}  // namespace ohlab
