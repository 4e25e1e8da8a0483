#pragma once

#include "ohlab/field.hpp"

namespace ohlab {

/// Discrete solution of -eps P'' + P' = u, P(0) = 0, P'(L) = 0.
struct EllipticSolution {
    ScalarField p;
    double dxp0;           // second-order one-sided P'(0)
    double residual_linf;  // max_i |(A P - u)_i|
    bool upwind;           // first-order upwind convection was used (eps < dx/2)
};

/// Relative residual bound asserted on every regularized solve.
inline constexpr double kEllipticResidualTolerance = 1e-10;

/// P(x_i) = dx (sum_{j<i} u_j + u_i / 2): trapezoidal accumulation anchored at P(0) = 0.
ScalarField integrate_primitive(const ScalarField& u);

/// Centred three-point stencils (upwind first difference when eps < dx/2).
/// The Dirichlet face value P(0) = 0 enters through the quadratic ghost
/// P_{-1} = -2 P_0 + P_1 / 3; the Neumann face through P_N = P_{N-1}.
/// Throws std::invalid_argument for eps <= 0, InternalError if the residual
/// bound is violated.
EllipticSolution solve_regularized(const ScalarField& u, double eps);

/// eps^2 ||P''||^2 + eps P'(0)^2 + ||P'||^2 - ||u||^2 with the gradient norm
/// taken from face differences.
double check_l2_identity(const ScalarField& u, const EllipticSolution& sol, double eps);

/// int u dx - eps P'(0).
double check_mass_identity(const ScalarField& u, const EllipticSolution& sol, double eps);

/// max over faces of |P'|, including the two boundary faces.
double max_abs_gradient(const EllipticSolution& sol);

/// sum_i u_i P_i dx.
double up_pairing(const ScalarField& u, const EllipticSolution& sol);

}  // namespace ohlab
