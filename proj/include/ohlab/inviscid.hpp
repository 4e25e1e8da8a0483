#pragma once

#include <string>
#include <vector>

#include "ohlab/field.hpp"
#include "ohlab/problem.hpp"
#include "ohlab/trajectory.hpp"

namespace ohlab {

struct RiemannInput {
    double uL;
    double uR;
};

/// Exact Riemann flux for u^2/2: min of f over [uL, uR] if uL <= uR, max over
/// [uR, uL] otherwise.
double godunov_flux(RiemannInput r);

/// State at x/t = 0 of the Riemann solution; godunov_flux = godunov_state^2 / 2.
double godunov_state(RiemannInput r);

enum class Splitting { lie, strang };

std::string to_string(Splitting s);
/// Accepts "lie" or "strang"; throws std::invalid_argument otherwise.
Splitting parse_splitting(const std::string& s);

struct InviscidOptions {
    double c_cfl = 0.5;
    Splitting splitting = Splitting::lie;
    int trace_order = 1;  // 1: two-cell linear, 2: three-cell quadratic
    bool abort_on_truncation = false;
};

/// One split step: Godunov update against the ghost state g on the left and a
/// zero-gradient ghost on the right, source u += dt gamma P(u).
///
/// Throws std::invalid_argument if dt max(||u||_inf, |g|) > dx, BlowUpError on
/// a non-finite result.
ScalarField step_inviscid(const ScalarField& u, double g, double gamma, double dt,
                          Splitting splitting = Splitting::lie, double t = 0.0);

/// Extrapolated value at x = 0 from the first cells.
double trace_value(const ScalarField& u, int order);

/// trace_value of every stored state, using traj.trace_order.
std::vector<double> trace_extract(const Trajectory& traj);

StampDiagnostics inviscid_diagnostics(const ScalarField& u, const ScalarField& p, double trace);

/// Stamps must increase within [0, final_time]; spec.epsilon must be 0.
Trajectory run_inviscid(const ProblemSpec& spec, const std::vector<double>& stamps,
                        const InviscidOptions& options = {});

}  // namespace ohlab
