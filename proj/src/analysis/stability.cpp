#include "ohlab/stability.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ohlab {

namespace {

double window_distance(const ScalarField& a, const ScalarField& b, double x_max) {
    return norm_l1_window(a - b, x_max);
}

}  // namespace

StabilityResult stability_compare(const Trajectory& u, const Trajectory& v, double R,
                                  const StabilityOptions& options) {
    if (!(R > 0.0)) throw std::invalid_argument("stability window needs R > 0");
    if (!(u.grid == v.grid)) throw std::invalid_argument("stability compare: grids differ");
    if (u.times != v.times) throw std::invalid_argument("stability compare: stamps differ");
    if (u.boundary != v.boundary) {
        throw std::invalid_argument("stability compare: boundary data differ");
    }
    if (u.size() == 0 || u.times.front() != 0.0) {
        throw std::invalid_argument("stability compare needs a stamp at t = 0");
    }
    u.validate();
    v.validate();

    StabilityResult res;
    res.cone.R = R;
    res.cone.T = u.times.back();
    res.cone.speed = u.u_sup() + v.u_sup();

    AuditCheck& chk = res.check;
    chk.name = "stability_cone";
    chk.bound = 1.0;
    chk.tolerance = options.tol;
    chk.cells = u.grid.cells();
    chk.dx = u.grid.dx();
    if (u.size() >= 2) chk.dt_out = u.times[1] - u.times[0];

    AuditCheck contr = chk;
    contr.name = "l1_contraction";
    contr.tolerance = options.contraction_tol;

    double worst = 0.0;
    double worst_contr = 0.0;
    for (std::size_t k = 1; k < u.size(); ++k) {
        const double t = u.times[k];
        StabilityRow row;
        row.t = t;
        row.lhs = window_distance(u.u[k], v.u[k], R);
        row.contraction_rhs = window_distance(u.u[0], v.u[0], res.cone.interval_end(0.0, t));
        row.rhs = std::exp(res.cone.speed * t) * row.contraction_rhs;
        if (row.rhs > 0.0) {
            row.ratio = row.lhs / row.rhs;
        } else {
            row.ratio = row.lhs > 0.0 ? INFINITY : 0.0;
        }
        if (row.ratio > worst || (k == 1 && row.ratio >= worst)) {
            worst = row.ratio;
            chk.witness = Witness{t, R, 0.0};
        }
        const double cr = row.contraction_rhs > 0.0 ? row.lhs / row.contraction_rhs
                                                    : (row.lhs > 0.0 ? INFINITY : 0.0);
        if (cr > worst_contr || (k == 1 && cr >= worst_contr)) {
            worst_contr = cr;
            contr.witness = Witness{t, R, 0.0};
        }
        res.rows.push_back(row);
    }
    chk.value = worst;
    chk.pass = worst <= 1.0 + options.tol;
    std::ostringstream os;
    os << "C(T)=" << res.cone.speed << " R=" << R;
    chk.detail = os.str();
    if (options.check_contraction) {
        contr.value = worst_contr;
        contr.pass = worst_contr <= 1.0 + options.contraction_tol;
        contr.detail = "value is max ||u-v||_{L1(0,R)} / ||u0-v0||_{L1(0,R+Ct)}";
        res.contraction = contr;
    }
    return res;
}

}  // namespace ohlab
