#include "ohlab/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ohlab {

Grid1D::Grid1D(double length, int cells) : length_(length), cells_(cells), dx_(0.0) {
    if (!(length > 0.0) || !std::isfinite(length)) {
        throw std::invalid_argument("grid length must be positive and finite, got " +
                                    std::to_string(length));
    }
    if (cells < kMinCells) {
        throw std::invalid_argument("grid needs at least " + std::to_string(kMinCells) +
                                    " cells, got " + std::to_string(cells));
    }
    dx_ = length / cells;
}

std::vector<double> Grid1D::centers() const {
    std::vector<double> x(static_cast<std::size_t>(cells_));
    for (int i = 0; i < cells_; ++i) x[static_cast<std::size_t>(i)] = center(i);
    return x;
}

Grid1D make_grid(double length, int cells) { return Grid1D(length, cells); }

}  // namespace ohlab
