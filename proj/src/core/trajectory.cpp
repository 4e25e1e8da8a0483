#include "ohlab/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ohlab {

void Trajectory::append(double t, ScalarField u_k, ScalarField p_k, double trace_k, double g_k,
                        const StampDiagnostics& diag) {
    if (!times.empty() && !(t > times.back())) {
        throw std::invalid_argument("trajectory stamps must increase strictly");
    }
    if (!(u_k.grid() == grid) || !(p_k.grid() == grid)) {
        throw std::invalid_argument("trajectory fields must share the trajectory grid");
    }
    times.push_back(t);
    u.push_back(std::move(u_k));
    p.push_back(std::move(p_k));
    trace.push_back(trace_k);
    boundary.push_back(g_k);
    diagnostics.push_back(diag);
}

void Trajectory::validate() const {
    const std::size_t n = times.size();
    if (u.size() != n || p.size() != n || trace.size() != n || boundary.size() != n ||
        diagnostics.size() != n) {
        throw std::invalid_argument("trajectory series lengths disagree");
    }
    for (std::size_t k = 0; k < n; ++k) {
        if (k > 0 && !(times[k] > times[k - 1])) {
            throw std::invalid_argument("trajectory stamps not strictly increasing at " +
                                        std::to_string(k));
        }
        if (!(u[k].grid() == grid) || !(p[k].grid() == grid)) {
            throw std::invalid_argument("trajectory field on foreign grid at stamp " +
                                        std::to_string(k));
        }
        if (!std::isfinite(trace[k]) || !std::isfinite(boundary[k])) {
            throw std::invalid_argument("non-finite trace at stamp " + std::to_string(k));
        }
    }
}

double Trajectory::uniform_spacing() const {
    if (times.size() < 2) throw std::invalid_argument("need at least two stamps");
    const double h = times[1] - times[0];
    for (std::size_t k = 1; k + 1 < times.size(); ++k) {
        if (std::abs((times[k + 1] - times[k]) - h) > 1e-9 * std::max(1.0, times.back())) {
            throw std::invalid_argument("output stamps are not uniform");
        }
    }
    return h;
}

double Trajectory::u_sup() const {
    double m = 0.0;
    for (const auto& f : u) m = std::max(m, norm_linf(f));
    return m;
}

double Trajectory::p_sup() const {
    double m = 0.0;
    for (const auto& f : p) m = std::max(m, norm_linf(f));
    return m;
}

int tail_cells(const Grid1D& grid) { return std::max(2, grid.cells() / 64); }

double tail_value(const ScalarField& u) {
    const int n = u.grid().cells();
    double m = 0.0;
    for (int i = n - tail_cells(u.grid()); i < n; ++i) m = std::max(m, std::abs(u[static_cast<std::size_t>(i)]));
    return m;
}

std::vector<double> uniform_stamps(double final_time, int count) {
    if (count < 2) throw std::invalid_argument("need at least two output stamps");
    if (!(final_time > 0.0)) throw std::invalid_argument("final time must be positive");
    std::vector<double> t(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) t[static_cast<std::size_t>(k)] = final_time * k / (count - 1);
    t.back() = final_time;
    return t;
}

}  // namespace ohlab
