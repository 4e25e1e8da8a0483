#include "ohlab/presets.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ohlab {

namespace {

using Params = std::map<std::string, double>;

Params merged(const PresetRef& ref) {
    Params p = preset_defaults(ref.name);
    for (const auto& [k, v] : ref.params) {
        if (!p.count(k)) {
            throw std::invalid_argument("preset '" + ref.name + "' has no parameter '" + k + "'");
        }
        p[k] = v;
    }
    return p;
}

bool is_u0(const std::string& n) {
    return n == "gauss_bump" || n == "box" || n == "ramp_down" || n == "zero";
}
bool is_g(const std::string& n) { return n == "zero" || n == "ramp_hold" || n == "sine_burst"; }

}  // namespace

std::map<std::string, double> preset_defaults(const std::string& name) {
    if (name == "gauss_bump") return {{"a", 1.0}, {"x0", 3.0}, {"s", 0.5}};
    if (name == "box") return {{"a", 1.0}, {"x0", 3.0}, {"w", 1.0}};
    if (name == "ramp_down") return {{"a", 1.0}, {"x0", 2.0}, {"w", 2.0}};
    if (name == "zero") return {};
    if (name == "ramp_hold") return {{"gmax", 0.5}, {"t_rise", 0.25}};
    if (name == "sine_burst") return {{"gmax", 0.5}, {"omega", 2.0 * std::numbers::pi}, {"t_end", 0.5}};
    throw std::invalid_argument("unknown preset '" + name + "'");
}

void check_u0_preset(const PresetRef& ref) {
    if (!is_u0(ref.name)) throw std::invalid_argument("unknown initial preset '" + ref.name + "'");
    const Params p = merged(ref);
    if (ref.name == "gauss_bump" && !(p.at("s") > 0.0)) throw std::invalid_argument("gauss_bump needs s > 0");
    if ((ref.name == "box" || ref.name == "ramp_down") && !(p.at("w") > 0.0)) {
        throw std::invalid_argument(ref.name + " needs w > 0");
    }
}

void check_g_preset(const PresetRef& ref) {
    if (!is_g(ref.name)) throw std::invalid_argument("unknown boundary preset '" + ref.name + "'");
    const Params p = merged(ref);
    if (ref.name == "ramp_hold" && !(p.at("t_rise") > 0.0)) {
        throw std::invalid_argument("ramp_hold needs t_rise > 0");
    }
}

std::function<double(double)> u0_profile(const PresetRef& ref) {
    check_u0_preset(ref);
    const Params p = merged(ref);
    if (ref.name == "gauss_bump") {
        const double a = p.at("a"), x0 = p.at("x0"), s = p.at("s");
        return [=](double x) {
            const double r = (x - x0) / s;
            return a * std::exp(-r * r);
        };
    }
    if (ref.name == "box") {
        const double a = p.at("a"), x0 = p.at("x0"), w = p.at("w");
        return [=](double x) { return std::abs(x - x0) < 0.5 * w ? a : 0.0; };
    }
    if (ref.name == "ramp_down") {
        const double a = p.at("a"), x0 = p.at("x0"), w = p.at("w");
        return [=](double x) {
            if (x <= x0) return a;
            if (x >= x0 + w) return 0.0;
            return a * (1.0 - (x - x0) / w);
        };
    }
    return [](double) { return 0.0; };
}

std::function<double(double)> g_profile(const PresetRef& ref) {
    check_g_preset(ref);
    const Params p = merged(ref);
    if (ref.name == "ramp_hold") {
        const double gmax = p.at("gmax"), tr = p.at("t_rise");
        return [=](double t) { return gmax * std::clamp(t / tr, 0.0, 1.0); };
    }
    if (ref.name == "sine_burst") {
        const double gmax = p.at("gmax"), om = p.at("omega"), te = p.at("t_end");
        return [=](double t) { return gmax * std::sin(om * std::clamp(t, 0.0, te)); };
    }
    return [](double) { return 0.0; };
}

ScalarField make_u0(const PresetRef& ref, const Grid1D& grid) {
    return ScalarField::sample(grid, u0_profile(ref));
}

BoundarySignal make_g(const PresetRef& ref, double horizon) {
    if (ref.name == "zero") return BoundarySignal::zero(horizon);
    return BoundarySignal::sample(g_profile(ref), horizon, horizon / 4096.0);
}

ProblemSpec make_problem(const ExperimentConfig& cfg, double epsilon, const PresetRef& u0) {
    const Grid1D grid(cfg.problem.length, cfg.problem.cells);
    return ProblemSpec{cfg.problem.gamma,
                       epsilon,
                       grid,
                       make_u0(u0, grid),
                       make_g(cfg.problem.g, cfg.problem.final_time),
                       cfg.problem.final_time,
                       cfg.problem.cutoff_width,
                       cfg.problem.relaxed};
}

}  // namespace ohlab
