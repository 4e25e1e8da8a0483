#include "ohlab/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ohlab/errors.hpp"
#include "ohlab/tridiagonal.hpp"

namespace ohlab {

namespace {

// P extended with one ghost on each side: index 0 is P_{-1}, index N+1 is P_N.
std::vector<double> with_ghosts(std::span<const double> p) {
    const std::size_t n = p.size();
    std::vector<double> e(n + 2);
    std::copy(p.begin(), p.end(), e.begin() + 1);
    e[0] = -2.0 * p[0] + p[1] / 3.0;
    e[n + 1] = p[n - 1];
    return e;
}

double one_sided_dxp0(std::span<const double> p, double dx) {
    return (9.0 * p[0] - p[1]) / (3.0 * dx);
}

}  // namespace

ScalarField integrate_primitive(const ScalarField& u) {
    const double dx = u.grid().dx();
    std::vector<double> p(u.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        p[i] = dx * (acc + 0.5 * u[i]);
        acc += u[i];
    }
    return ScalarField(u.grid(), std::move(p));
}

EllipticSolution solve_regularized(const ScalarField& u, double eps) {
    if (!(eps > 0.0)) throw std::invalid_argument("regularized solve needs eps > 0");
    const std::size_t n = u.size();
    const double dx = u.grid().dx();
    const bool upwind = eps < 0.5 * dx;

    const double diff = eps / (dx * dx);
    double lo = -diff - 0.5 / dx;
    double di = 2.0 * diff;
    double up = -diff + 0.5 / dx;
    if (upwind) {
        lo = -diff - 1.0 / dx;
        di = 2.0 * diff + 1.0 / dx;
        up = -diff;
    }
    std::vector<double> lower(n, lo), diag(n, di), upper(n, up);
    // Quadratic ghost for P(0) = 0 and mirror ghost for P'(L) = 0.
    diag[0] += -2.0 * lo;
    upper[0] += lo / 3.0;
    diag[n - 1] += up;

    std::vector<double> p = solve_tridiagonal(lower, diag, upper, u.values());

    const std::vector<double> e = with_ghosts(p);
    double residual = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = lo * e[i] + di * e[i + 1] + up * e[i + 2] - u[i];
        residual = std::max(residual, std::abs(r));
    }
    const double bound = kEllipticResidualTolerance * (1.0 + norm_linf(u));
    if (!(residual < bound)) {
        std::ostringstream os;
        os << "elliptic residual " << residual << " exceeds " << bound;
        throw InternalError(os.str());
    }
    const double dxp0 = one_sided_dxp0(p, dx);
    return {ScalarField(u.grid(), std::move(p)), dxp0, residual, upwind};
}

double check_l2_identity(const ScalarField& u, const EllipticSolution& sol, double eps) {
    const std::size_t n = u.size();
    const double dx = u.grid().dx();
    const std::vector<double> e = with_ghosts(sol.p.values());
    double second = 0.0;
    for (std::size_t i = 1; i <= n; ++i) {
        const double d2 = (e[i + 1] - 2.0 * e[i] + e[i - 1]) / (dx * dx);
        second += d2 * d2;
    }
    double grad = 0.0;
    for (std::size_t j = 0; j <= n; ++j) {
        const double d = (e[j + 1] - e[j]) / dx;
        grad += (j == 0 || j == n ? 0.5 : 1.0) * d * d;
    }
    const double u2 = norm_l2(u);
    return eps * eps * second * dx + eps * sol.dxp0 * sol.dxp0 + grad * dx - u2 * u2;
}

double check_mass_identity(const ScalarField& u, const EllipticSolution& sol, double eps) {
    double mass = 0.0;
    for (double x : u.values()) mass += x;
    return mass * u.grid().dx() - eps * sol.dxp0;
}

double max_abs_gradient(const EllipticSolution& sol) {
    const double dx = sol.p.grid().dx();
    const std::vector<double> e = with_ghosts(sol.p.values());
    double m = 0.0;
    for (std::size_t j = 0; j + 1 < e.size(); ++j) m = std::max(m, std::abs(e[j + 1] - e[j]) / dx);
    return m;
}

double up_pairing(const ScalarField& u, const EllipticSolution& sol) {
    double s = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * sol.p[i];
    return s * u.grid().dx();
}

}  // namespace ohlab
