#pragma once

#include <map>
#include <string>
#include <vector>

#include "ohlab/inviscid.hpp"

namespace ohlab {

/// Flat "section.key = value" text; '#' starts a comment.
using KeyValues = std::map<std::string, std::string>;

/// Throws LoadError naming the line on malformed input or a repeated key.
KeyValues parse_key_values(const std::string& text);
KeyValues load_key_values(const std::string& path);

/// A named preset plus its numeric parameters.
struct PresetRef {
    std::string name;
    std::map<std::string, double> params;
};

struct ExperimentConfig {
    struct Problem {
        double gamma = 0.5;
        double length = 20.0;
        int cells = 1024;
        double final_time = 1.0;
        double epsilon = 0.05;
        double cutoff_width = 1.0;
        bool relaxed = false;
        PresetRef u0{"gauss_bump", {}};
        PresetRef v0{"gauss_bump", {{"x0", 3.5}}};  // second datum for the stability experiment
        PresetRef g{"zero", {}};
    } problem;
    struct Scheme {
        double c_cfl = 0.5;
        Splitting splitting = Splitting::lie;
        std::string flux = "godunov";
        int trace_order = 1;
        bool abort_on_truncation = false;
    } scheme;
    struct Sweep {
        std::vector<double> epsilons{0.08, 0.04, 0.02, 0.01};
        bool parallel = true;
    } sweep;
    struct Audit {
        double K = 0.25;
        int constant_intervals = 64;
        double bln_tol = 1e-6;
        double stability_tol = 0.05;
        double stability_R = 0.0;  // 0 selects L/4
        double contraction_tol = 1e-3;
        double sweep_ratio = 2.0;
        double monotone_slack = 1.1;
    } audit;
    struct Output {
        std::string dir = "out";
        int stamps = 21;
        std::vector<std::string> formats{"csv", "json", "snapshot"};
    } output;

    /// Throws std::invalid_argument on a broken invariant (unknown preset,
    /// non-decreasing epsilon list, stamp count < 2, ...).
    void validate() const;
    bool wants(const std::string& format) const;
    double stability_window() const { return audit.stability_R > 0.0 ? audit.stability_R : problem.length / 4.0; }
};

/// Unknown keys and unparsable values throw std::invalid_argument.
ExperimentConfig config_from_key_values(const KeyValues& kv);
ExperimentConfig load_config(const std::string& path);

/// "0.08, 0.04 0.02" -> {0.08, 0.04, 0.02}.
std::vector<double> parse_number_list(const std::string& s);

}  // namespace ohlab
