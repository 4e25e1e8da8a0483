#pragma once

#include <functional>
#include <span>
#include <vector>

namespace ohlab {

/// Boundary datum g(t) sampled uniformly on [0, T].
///
/// Between samples the signal is linear; past the last sample it is held
/// constant. The Lipschitz and sup bounds are measured from the samples, so
/// they hold by construction. g(0) = 0 is not enforced here; validate_spec
/// reports it.
class BoundarySignal {
public:
    BoundarySignal(std::vector<double> samples, double sample_step);

    static BoundarySignal zero(double horizon);
    static BoundarySignal sample(const std::function<double(double)>& g, double horizon,
                                 double sample_step);

    double operator()(double t) const;

    std::span<const double> samples() const { return samples_; }
    double sample_step() const { return step_; }
    double horizon() const { return step_ * static_cast<double>(samples_.size() - 1); }
    double lipschitz() const { return lipschitz_; }
    double sup() const { return sup_; }

    friend bool operator==(const BoundarySignal&, const BoundarySignal&) = default;

private:
    std::vector<double> samples_;
    double step_;
    double lipschitz_;
    double sup_;
};

}  // namespace ohlab
