#pragma once

#include <vector>

#include "ohlab/grid.hpp"

namespace ohlab {

/// Smooth cut-off chi with chi(0) = 1 and support [0, w), sampled at cell
/// centres together with its derivative.
struct CutoffChi {
    double width;
    /// |chi'(x)| <= derivative_constant / width for all x.
    double derivative_constant;
    std::vector<double> chi;
    std::vector<double> dchi;
};

/// chi(x) = exp(1 - 1/(1 - (x/w)^2)) for 0 <= x < w, 0 otherwise.
double cutoff_profile(double x, double width);
double cutoff_profile_derivative(double x, double width);

/// sup_{0<=r<1} |d/dr exp(1 - 1/(1-r^2))|.
double cutoff_derivative_constant();

/// Throws std::invalid_argument unless 0 < w <= L/2.
CutoffChi make_cutoff(const Grid1D& grid, double width);

}  // namespace ohlab
