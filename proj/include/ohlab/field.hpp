#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "ohlab/grid.hpp"

namespace ohlab {

/// Cell averages of a scalar quantity on a Grid1D. Entries are always finite.
class ScalarField {
public:
    /// Throws std::invalid_argument on length mismatch or a non-finite entry.
    ScalarField(Grid1D grid, std::vector<double> values);

    static ScalarField zeros(const Grid1D& grid);
    static ScalarField constant(const Grid1D& grid, double value);
    /// Midpoint-rule sampling of f at the cell centres.
    static ScalarField sample(const Grid1D& grid, const std::function<double(double)>& f);

    const Grid1D& grid() const { return grid_; }
    std::span<const double> values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }

    ScalarField scaled(double a) const;
    ScalarField operator+(const ScalarField& other) const;
    ScalarField operator-(const ScalarField& other) const;

    friend bool operator==(const ScalarField&, const ScalarField&) = default;

private:
    Grid1D grid_;
    std::vector<double> values_;
};

double norm_l1(const ScalarField& f);
double norm_l2(const ScalarField& f);
double norm_linf(const ScalarField& f);

/// L1 norm restricted to the cells whose centre lies in [0, x_max).
double norm_l1_window(const ScalarField& f, double x_max);

}  // namespace ohlab
