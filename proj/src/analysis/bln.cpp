#include "ohlab/bln.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ohlab {

TraceSeries TraceSeries::from_trajectory(const Trajectory& traj) {
    return {traj.times, traj.trace, traj.boundary};
}

void TraceSeries::validate() const {
    if (trace.size() != times.size() || g.size() != times.size()) {
        throw std::invalid_argument("trace series columns differ in length");
    }
    for (std::size_t k = 0; k < times.size(); ++k) {
        if (!std::isfinite(times[k]) || !std::isfinite(trace[k]) || !std::isfinite(g[k])) {
            throw std::invalid_argument("trace series holds a non-finite value at stamp " +
                                        std::to_string(k));
        }
    }
}

double bln_minimum(double trace, double g, double dc, double* argmin) {
    if (!(dc > 0.0)) throw std::invalid_argument("bln_minimum needs dc > 0");
    const double lo = std::min(trace, g);
    const double hi = std::max(trace, g);
    const double s = sign_of(trace - g);
    const double f_tau = 0.5 * trace * trace;
    double best = s * (f_tau - 0.5 * lo * lo);
    double best_c = lo;
    auto consider = [&](double c) {
        const double v = s * (f_tau - 0.5 * c * c);
        if (v < best) {
            best = v;
            best_c = c;
        }
    };
    consider(hi);
    if (lo < 0.0 && 0.0 < hi) consider(0.0);
    const double steps = std::floor((hi - lo) / dc);
    for (double i = 1.0; i <= steps && i < 1e7; i += 1.0) consider(lo + i * dc);
    if (argmin) *argmin = best_c;
    return best;
}

AuditCheck bln_residual(const TraceSeries& tr, double dc, double tol) {
    tr.validate();
    AuditCheck check;
    check.name = "bln_residual";
    check.bound = 0.0;
    check.tolerance = tol;
    double worst = 0.0;
    for (std::size_t k = 0; k < tr.times.size(); ++k) {
        double c = 0.0;
        const double v = bln_minimum(tr.trace[k], tr.g[k], dc, &c);
        if (v < worst) {
            worst = v;
            check.witness = Witness{tr.times[k], 0.0, c};
        }
    }
    check.value = worst;
    check.pass = worst >= -tol;
    std::ostringstream os;
    os << "dc=" << dc << " stamps=" << tr.times.size();
    check.detail = os.str();
    return check;
}

double trace_product_form(double trace, double c) {
    return (0.5 * trace * trace - 0.5 * c * c) * (sign_of(trace - c) + sign_of(c));
}

AuditCheck trace_product_check(const TraceSeries& tr, const KruzhkovConstantGrid& cgrid,
                               double dc, double bln_tol, double tol) {
    tr.validate();
    AuditCheck check;
    check.name = "trace_product_form";
    check.bound = 0.0;
    check.tolerance = tol;
    double worst = 0.0;
    std::size_t admissible = 0;
    for (std::size_t k = 0; k < tr.times.size(); ++k) {
        if (bln_minimum(tr.trace[k], tr.g[k], dc) < -bln_tol) continue;
        ++admissible;
        for (double c : cgrid.values) {
            const double v = trace_product_form(tr.trace[k], c);
            if (v < worst) {
                worst = v;
                check.witness = Witness{tr.times[k], 0.0, c};
            }
        }
    }
    check.value = worst;
    check.pass = worst >= -tol;
    check.detail = "admissible stamps=" + std::to_string(admissible);
    return check;
}

}  // namespace ohlab
