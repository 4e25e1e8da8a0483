#include "ohlab/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ohlab {

BoundarySignal::BoundarySignal(std::vector<double> samples, double sample_step)
    : samples_(std::move(samples)), step_(sample_step), lipschitz_(0.0), sup_(0.0) {
    if (samples_.size() < 2) throw std::invalid_argument("boundary signal needs two samples");
    if (!(step_ > 0.0)) throw std::invalid_argument("boundary sample step must be positive");
    for (std::size_t k = 0; k < samples_.size(); ++k) {
        if (!std::isfinite(samples_[k])) throw std::invalid_argument("non-finite boundary sample");
        sup_ = std::max(sup_, std::abs(samples_[k]));
        if (k > 0) lipschitz_ = std::max(lipschitz_, std::abs(samples_[k] - samples_[k - 1]) / step_);
    }
}

BoundarySignal BoundarySignal::zero(double horizon) {
    return BoundarySignal(std::vector<double>(2, 0.0), horizon > 0.0 ? horizon : 1.0);
}

BoundarySignal BoundarySignal::sample(const std::function<double(double)>& g, double horizon,
                                      double sample_step) {
    if (!(horizon > 0.0) || !(sample_step > 0.0)) {
        throw std::invalid_argument("boundary horizon and step must be positive");
    }
    const auto n = static_cast<std::size_t>(std::ceil(horizon / sample_step - 1e-9));
    const double step = horizon / static_cast<double>(n);
    std::vector<double> s(n + 1);
    for (std::size_t k = 0; k <= n; ++k) s[k] = g(step * static_cast<double>(k));
    return BoundarySignal(std::move(s), step);
}

double BoundarySignal::operator()(double t) const {
    if (t <= 0.0) return samples_.front();
    const double pos = t / step_;
    const auto k = static_cast<std::size_t>(pos);
    if (k + 1 >= samples_.size()) return samples_.back();
    const double w = pos - static_cast<double>(k);
    return (1.0 - w) * samples_[k] + w * samples_[k + 1];
}

}  // namespace ohlab
