#pragma once

#include <vector>

namespace ohlab {

/// Uniform cell-centred grid on the truncated half-line [0, L].
///
/// Cell i covers [i dx, (i+1) dx] and carries its centre (i + 1/2) dx.
class Grid1D {
public:
    static constexpr int kMinCells = 4;

    /// Throws std::invalid_argument unless L > 0 and N >= kMinCells.
    Grid1D(double length, int cells);

    double length() const { return length_; }
    int cells() const { return cells_; }
    double dx() const { return dx_; }
    double center(int i) const { return (i + 0.5) * dx_; }
    std::vector<double> centers() const;

    friend bool operator==(const Grid1D&, const Grid1D&) = default;

private:
    double length_;
    int cells_;
    double dx_;
};

Grid1D make_grid(double length, int cells);

}  // namespace ohlab
