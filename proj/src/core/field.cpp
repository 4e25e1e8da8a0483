#include "ohlab/field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ohlab {

ScalarField::ScalarField(Grid1D grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
    if (values_.size() != static_cast<std::size_t>(grid_.cells())) {
        throw std::invalid_argument("field has " + std::to_string(values_.size()) +
                                    " values for a grid of " + std::to_string(grid_.cells()) +
                                    " cells");
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i])) {
            throw std::invalid_argument("non-finite field value at cell " + std::to_string(i));
        }
    }
}

ScalarField ScalarField::zeros(const Grid1D& grid) { return constant(grid, 0.0); }

ScalarField ScalarField::constant(const Grid1D& grid, double value) {
    return ScalarField(grid, std::vector<double>(static_cast<std::size_t>(grid.cells()), value));
}

ScalarField ScalarField::sample(const Grid1D& grid, const std::function<double(double)>& f) {
    std::vector<double> v(static_cast<std::size_t>(grid.cells()));
    for (int i = 0; i < grid.cells(); ++i) v[static_cast<std::size_t>(i)] = f(grid.center(i));
    return ScalarField(grid, std::move(v));
}

ScalarField ScalarField::scaled(double a) const {
    std::vector<double> v(values_);
    for (double& x : v) x *= a;
    return ScalarField(grid_, std::move(v));
}

ScalarField ScalarField::operator+(const ScalarField& other) const {
    if (!(grid_ == other.grid_)) throw std::invalid_argument("field grids differ");
    std::vector<double> v(values_);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += other.values_[i];
    return ScalarField(grid_, std::move(v));
}

ScalarField ScalarField::operator-(const ScalarField& other) const {
    if (!(grid_ == other.grid_)) throw std::invalid_argument("field grids differ");
    std::vector<double> v(values_);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= other.values_[i];
    return ScalarField(grid_, std::move(v));
}

double norm_l1(const ScalarField& f) {
    double s = 0.0;
    for (double x : f.values()) s += std::abs(x);
    return s * f.grid().dx();
}

double norm_l2(const ScalarField& f) {
    double s = 0.0;
    for (double x : f.values()) s += x * x;
    return std::sqrt(s * f.grid().dx());
}

double norm_linf(const ScalarField& f) {
    double m = 0.0;
    for (double x : f.values()) m = std::max(m, std::abs(x));
    return m;
}

double norm_l1_window(const ScalarField& f, double x_max) {
    const Grid1D& g = f.grid();
    double s = 0.0;
    for (int i = 0; i < g.cells() && g.center(i) < x_max; ++i) s += std::abs(f[static_cast<std::size_t>(i)]);
    return s * g.dx();
}

}  // namespace ohlab
