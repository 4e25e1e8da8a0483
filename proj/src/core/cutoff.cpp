#include "ohlab/cutoff.hpp"

#include <cmath>
#include <stdexcept>

namespace ohlab {

double cutoff_profile(double x, double width) {
    const double r = x / width;
    if (r <= 0.0) return 1.0;
    if (r >= 1.0) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - r * r));
}

double cutoff_profile_derivative(double x, double width) {
    const double r = x / width;
    if (r <= 0.0 || r >= 1.0) return 0.0;
    const double s = 1.0 - r * r;
    return -cutoff_profile(x, width) * 2.0 * r / (s * s) / width;
}

double cutoff_derivative_constant() {
    // Golden-section search on the unimodal |d/dr chi(r)|, r in (0, 1).
    static const double value = [] {
        auto f = [](double r) { return -cutoff_profile_derivative(r, 1.0); };
        double a = 0.0;
        double b = 1.0;
        const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
        double c = b - phi * (b - a);
        double d = a + phi * (b - a);
        for (int it = 0; it < 200; ++it) {
            if (f(c) > f(d)) {
                b = d;
            } else {
                a = c;
            }
            c = b - phi * (b - a);
            d = a + phi * (b - a);
        }
        return f(0.5 * (a + b));
    }();
    return value;
}

CutoffChi make_cutoff(const Grid1D& grid, double width) {
    if (!(width > 0.0) || width > 0.5 * grid.length()) {
        throw std::invalid_argument("cut-off width must lie in (0, L/2]");
    }
    CutoffChi c{width, cutoff_derivative_constant(), {}, {}};
    c.chi.resize(static_cast<std::size_t>(grid.cells()));
    c.dchi.resize(c.chi.size());
    for (int i = 0; i < grid.cells(); ++i) {
        const double x = grid.center(i);
        c.chi[static_cast<std::size_t>(i)] = cutoff_profile(x, width);
        c.dchi[static_cast<std::size_t>(i)] = cutoff_profile_derivative(x, width);
    }
    return c;
}

}  // namespace ohlab
