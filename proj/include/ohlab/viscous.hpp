#pragma once

#include <vector>

#include "ohlab/boundary.hpp"
#include "ohlab/cutoff.hpp"
#include "ohlab/elliptic.hpp"
#include "ohlab/field.hpp"
#include "ohlab/problem.hpp"
#include "ohlab/trajectory.hpp"

namespace ohlab {

/// u together with the elliptic solve of that same u.
struct ViscousState {
    double t;
    ScalarField u;
    EllipticSolution p;
    long step;
};

struct ViscousOptions {
    double c_cfl = 0.5;
    /// Throw StepFailure once |u| near x = L exceeds the relative tail bound
    /// instead of flagging the trajectory.
    bool abort_on_truncation = false;
};

/// Tail size relative to ||u0||_inf that raises the truncation warning.
inline constexpr double kTruncationTolerance = 1e-6;
inline constexpr double kMinTimeStep = 1e-12;

/// c_cfl * min(dx / max(||u||_inf, 1e-12), dx^2 / (2 eps)); the diffusive
/// limit is dropped when eps = 0.
double cfl_dt(const ScalarField& u, double eps, double dx, double c_cfl);

/// Local Lax-Friedrichs flux for u^2/2 with the interface speed max(|a|, |b|).
double llf_flux(double a, double b);

/// Semi-discrete right-hand side -D(u^2/2) + eps D^2 u + gamma p.
///
/// Left ghost g for the convective flux, face-Dirichlet ghost 2g - u_0 for the
/// diffusion; zero-gradient ghost on the right. Throws BlowUpError on a
/// non-finite entry.
ScalarField viscous_rhs(const ScalarField& u, const ScalarField& p, double gamma, double eps,
                        double g, double t);
ScalarField viscous_rhs(const ViscousState& state, double gamma, double eps,
                        const BoundarySignal& g);

ViscousState make_viscous_state(ScalarField u, double eps, double t, long step = 0);

/// (9 u_0 - u_1 - 8 g) / (3 dx): quadratic through the face value and two cells.
double dxu0_one_sided(const ScalarField& u, double g);

StampDiagnostics viscous_diagnostics(const ScalarField& u, const EllipticSolution& p, double eps,
                                     double g);

/// Heun (SSP-RK2) integration recording the states at the given stamps.
/// Stamps must be nondecreasing in [0, final_time]; a stamp at 0 records u0.
Trajectory run_viscous(const ProblemSpec& spec, const std::vector<double>& stamps,
                       const ViscousOptions& options = {});

/// v = u - g chi.
ScalarField homogenized_view(const ViscousState& state, const CutoffChi& chi, double g);

}  // namespace ohlab
