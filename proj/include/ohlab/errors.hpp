#pragma once

#include <stdexcept>
#include <string>

namespace ohlab {

// Numerical blow-up detected while evaluating a semi-discrete right-hand side
// or after a time step.
class BlowUpError : public std::runtime_error {
public:
    BlowUpError(double time, int cell, const std::string& what)
        : std::runtime_error(what), time_(time), cell_(cell) {}

    double time() const { return time_; }
    int cell() const { return cell_; }

private:
    double time_;
    int cell_;
};

// The adaptive time step collapsed below the usable floor.
class StepFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Broken internal invariant (e.g. a singular system that cannot be singular).
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Snapshot / config file could not be loaded.
class LoadError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace ohlab
