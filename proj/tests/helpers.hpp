#pragma once

#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

#include "ohlab/elliptic.hpp"
#include "ohlab/inviscid.hpp"
#include "ohlab/problem.hpp"
#include "ohlab/trajectory.hpp"

namespace testing {

using namespace ohlab;

inline ProblemSpec burgers_spec(const Grid1D& grid, const std::function<double(double)>& u0,
                                double g, double final_time) {
    return ProblemSpec{0.0, 0.0, grid, ScalarField::sample(grid, u0),
                       BoundarySignal(std::vector<double>{g, g}, final_time), final_time,
                       grid.length() / 4.0, true};
}

// The 1 -> 0 Riemann problem at x0 = 5 with g = 1: a shock moving at speed 1/2.
inline ProblemSpec shock_spec(int cells) {
    return burgers_spec(Grid1D(20.0, cells), [](double x) { return x < 5.0 ? 1.0 : 0.0; }, 1.0,
                        1.0);
}

// Averages a field on a grid with k times more cells onto the coarse grid.
inline ScalarField restrict_average(const ScalarField& fine, const Grid1D& coarse) {
    const int k = fine.grid().cells() / coarse.cells();
    std::vector<double> v(static_cast<std::size_t>(coarse.cells()), 0.0);
    for (int i = 0; i < coarse.cells(); ++i) {
        for (int j = 0; j < k; ++j) v[static_cast<std::size_t>(i)] += fine[static_cast<std::size_t>(i * k + j)];
        v[static_cast<std::size_t>(i)] /= k;
    }
    return ScalarField(coarse, std::move(v));
}

// Trajectory that holds one state at every stamp (a stationary field).
inline Trajectory frozen_trajectory(const ScalarField& u, double g, double trace,
                                    const std::vector<double>& stamps, double gamma = 0.0) {
    Trajectory t(u.grid());
    t.gamma = gamma;
    const ScalarField p = integrate_primitive(u);
    for (double s : stamps) t.append(s, u, p, trace, g, inviscid_diagnostics(u, p, trace));
    return t;
}

inline std::vector<double> random_values(std::mt19937_64& rng, std::size_t n, double lo, double hi) {
    std::uniform_real_distribution<double> d(lo, hi);
    std::vector<double> v(n);
    for (double& x : v) x = d(rng);
    return v;
}

}  // namespace testing
