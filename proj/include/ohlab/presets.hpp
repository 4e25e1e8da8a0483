#pragma once

#include <functional>

#include "ohlab/boundary.hpp"
#include "ohlab/config.hpp"
#include "ohlab/field.hpp"
#include "ohlab/problem.hpp"

namespace ohlab {

/// Initial data: gauss_bump(a, x0, s) = a exp(-((x-x0)/s)^2), box(a, x0, w)
/// = a on |x - x0| < w/2, ramp_down(a, x0, w) = a up to x0 then linear to 0
/// at x0 + w, zero.
///
/// Boundary data: zero, ramp_hold(gmax, t_rise) = gmax min(t/t_rise, 1),
/// sine_burst(gmax, omega, t_end) = gmax sin(omega min(t, t_end)).
/// Missing parameters take the defaults listed by preset_defaults.
std::map<std::string, double> preset_defaults(const std::string& name);

/// Throw std::invalid_argument for an unknown name or parameter.
void check_u0_preset(const PresetRef& ref);
void check_g_preset(const PresetRef& ref);

std::function<double(double)> u0_profile(const PresetRef& ref);
std::function<double(double)> g_profile(const PresetRef& ref);

ScalarField make_u0(const PresetRef& ref, const Grid1D& grid);
/// Sampled on [0, horizon] with 4096 intervals.
BoundarySignal make_g(const PresetRef& ref, double horizon);

/// Problem built from the config with the given epsilon and initial preset.
ProblemSpec make_problem(const ExperimentConfig& cfg, double epsilon, const PresetRef& u0);
inline ProblemSpec make_problem(const ExperimentConfig& cfg, double epsilon) {
    return make_problem(cfg, epsilon, cfg.problem.u0);
}

}  // namespace ohlab
