#include "ohlab/problem.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ohlab/elliptic.hpp"

namespace ohlab {

namespace {

void add(SpecValidation& v, std::string code, std::string message) {
    v.violations.push_back({std::move(code), std::move(message)});
}

}  // namespace

bool SpecValidation::has(const std::string& code) const {
    return std::any_of(violations.begin(), violations.end(),
                       [&](const Violation& x) { return x.code == code; });
}

SpecValidation validate_spec(const ProblemSpec& spec) {
    SpecValidation v;
    const Grid1D& grid = spec.grid;

    if (spec.relaxed) {
        if (!(spec.gamma >= 0.0)) add(v, "gamma", "gamma<0 (relaxed mode needs gamma>=0)");
    } else if (!(spec.gamma > 0.0)) {
        add(v, "gamma", "gamma<=0");
    }
    if (!(spec.epsilon >= 0.0 && spec.epsilon < 1.0)) add(v, "epsilon", "epsilon outside [0,1)");
    if (!(spec.final_time > 0.0)) add(v, "final_time", "final time must be positive");

    if (!(spec.u0.grid() == grid)) {
        add(v, "grid", "u0 lives on a different grid");
    } else {
        v.u0_l1 = norm_l1(spec.u0);
        v.u0_linf = norm_linf(spec.u0);
        const double scale = std::max(1.0, v.u0_linf);
        for (int i = 0; i < grid.cells(); ++i) {
            if (grid.center(i) > 0.5 * grid.length() &&
                std::abs(spec.u0[static_cast<std::size_t>(i)]) > 1e-12 * scale) {
                add(v, "u0_support", "u0 not supported in [0, L/2]");
                break;
            }
        }
        const ScalarField p0 = integrate_primitive(spec.u0);
        v.p0_l2 = norm_l2(p0);
        v.p0_tail = std::abs(p0[p0.size() - 1]) / std::max(1.0, norm_linf(p0));
        if (v.p0_tail > kPrimitiveTailTolerance) {
            std::ostringstream os;
            os << "P0 does not decay (|P0(L)| = " << std::abs(p0[p0.size() - 1])
               << "), so P0 is not in L2 on the half-line";
            add(v, "p0_l2", os.str());
        }
    }

    v.g_lipschitz = spec.g.lipschitz();
    v.g_sup = spec.g.sup();
    if (spec.g.samples().front() != 0.0) add(v, "g0", "g(0)!=0");

    if (!(spec.cutoff_width > 0.0) || spec.cutoff_width > 0.5 * grid.length()) {
        add(v, "cutoff_width", "cut-off width outside (0, L/2]");
    }
    return v;
}

void require_admissible(const ProblemSpec& spec) {
    const SpecValidation v = validate_spec(spec);
    // A non-decaying primitive and wide support are reported, not fatal; relaxed
    // problems also run with a boundary datum that is incompatible at t = 0.
    std::ostringstream os;
    bool fatal = false;
    for (const Violation& x : v.violations) {
        if (x.code == "p0_l2" || x.code == "u0_support") continue;
        if (x.code == "g0" && spec.relaxed) continue;
        os << (fatal ? "; " : "") << x.message;
        fatal = true;
    }
    if (fatal) throw std::invalid_argument("inadmissible problem: " + os.str());
}

}  // namespace ohlab
