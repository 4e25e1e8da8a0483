#pragma once

#include <span>
#include <vector>

namespace ohlab {

/// Thomas elimination for a x_{i-1} + b x_i + c x_{i+1} = d.
///
/// lower[0] and upper[n-1] are ignored. Throws InternalError on a zero pivot;
/// the elliptic systems assembled here are diagonally dominant, so a zero pivot
/// means a broken assembly.
std::vector<double> solve_tridiagonal(std::span<const double> lower, std::span<const double> diag,
                                      std::span<const double> upper, std::span<const double> rhs);

}  // namespace ohlab
