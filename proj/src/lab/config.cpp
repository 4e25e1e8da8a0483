#include "ohlab/config.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ohlab/errors.hpp"
#include "ohlab/presets.hpp"

namespace ohlab {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
    errno = 0;
    char* end = nullptr;
    const double d = std::strtod(v.c_str(), &end);
    if (v.empty() || errno != 0 || end != v.c_str() + v.size()) {
        throw std::invalid_argument("config key '" + key + "': not a number: '" + v + "'");
    }
    return d;
}

int to_int(const std::string& key, const std::string& v) {
    const double d = to_double(key, v);
    if (d != static_cast<double>(static_cast<long>(d)) || d > 1e9 || d < -1e9) {
        throw std::invalid_argument("config key '" + key + "': not an integer: '" + v + "'");
    }
    return static_cast<int>(d);
}

bool to_bool(const std::string& key, const std::string& v) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw std::invalid_argument("config key '" + key + "': not a boolean: '" + v + "'");
}

std::vector<std::string> split_list(const std::string& s) {
    std::string t = s;
    std::replace(t.begin(), t.end(), ',', ' ');
    std::istringstream is(t);
    std::vector<std::string> out;
    for (std::string w; is >> w;) out.push_back(w);
    return out;
}

}  // namespace

KeyValues parse_key_values(const std::string& text) {
    KeyValues kv;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw LoadError("config line " + std::to_string(lineno) + ": expected key = value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw LoadError("config line " + std::to_string(lineno) + ": empty key");
        if (!kv.emplace(key, value).second) {
            throw LoadError("config line " + std::to_string(lineno) + ": repeated key '" + key + "'");
        }
    }
    return kv;
}

KeyValues load_key_values(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw LoadError("cannot open config '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_key_values(ss.str());
}

std::vector<double> parse_number_list(const std::string& s) {
    std::vector<double> out;
    for (const std::string& w : split_list(s)) out.push_back(to_double("list", w));
    return out;
}

bool ExperimentConfig::wants(const std::string& format) const {
    return std::find(output.formats.begin(), output.formats.end(), format) != output.formats.end();
}

void ExperimentConfig::validate() const {
    auto fail = [](const std::string& m) { throw std::invalid_argument("config: " + m); };
    if (!(problem.length > 0.0)) fail("problem.length must be positive");
    if (problem.cells < 4) fail("problem.cells must be at least 4");
    if (!(problem.final_time > 0.0)) fail("problem.final_time must be positive");
    if (!(problem.epsilon >= 0.0 && problem.epsilon < 1.0)) fail("problem.epsilon must be in [0,1)");
    check_u0_preset(problem.u0);
    check_u0_preset(problem.v0);
    check_g_preset(problem.g);
    if (!(scheme.c_cfl > 0.0 && scheme.c_cfl <= 1.0)) fail("scheme.c_cfl must be in (0,1]");
    if (scheme.flux != "godunov") fail("scheme.flux: only 'godunov' is available");
    if (scheme.trace_order != 1 && scheme.trace_order != 2) fail("scheme.trace_order must be 1 or 2");
    for (std::size_t k = 0; k < sweep.epsilons.size(); ++k) {
        if (!(sweep.epsilons[k] > 0.0)) fail("sweep.epsilons must be positive");
        if (k > 0 && !(sweep.epsilons[k] < sweep.epsilons[k - 1])) {
            fail("sweep.epsilons must be strictly decreasing");
        }
    }
    if (!(audit.K > 0.0)) fail("audit.K must be positive");
    if (audit.constant_intervals < 2 || audit.constant_intervals % 2) {
        fail("audit.constant_intervals must be even and >= 2");
    }
    if (output.stamps < 2) fail("output.stamps must be at least 2");
    for (const std::string& f : output.formats) {
        if (f != "csv" && f != "json" && f != "snapshot") fail("unknown output format '" + f + "'");
    }
}

ExperimentConfig config_from_key_values(const KeyValues& kv) {
    ExperimentConfig cfg;
    auto preset_param = [](PresetRef& ref, const std::string& prefix, const std::string& key,
                           const std::string& value) {
        if (key == prefix) {
            ref.name = value;
            ref.params.clear();
            return true;
        }
        if (key.rfind(prefix + ".", 0) == 0) {
            ref.params[key.substr(prefix.size() + 1)] = to_double(key, value);
            return true;
        }
        return false;
    };
    // Preset names first so that parameters are not cleared by a later name.
    for (const char* p : {"problem.u0", "problem.v0", "problem.g"}) {
        const auto it = kv.find(p);
        if (it == kv.end()) continue;
        PresetRef& ref = std::string(p) == "problem.u0"   ? cfg.problem.u0
                         : std::string(p) == "problem.v0" ? cfg.problem.v0
                                                          : cfg.problem.g;
        ref.name = it->second;
        ref.params.clear();
    }
    for (const auto& [key, value] : kv) {
        if (key == "problem.u0" || key == "problem.v0" || key == "problem.g") continue;
        if (preset_param(cfg.problem.u0, "problem.u0", key, value)) continue;
        if (preset_param(cfg.problem.v0, "problem.v0", key, value)) continue;
        if (preset_param(cfg.problem.g, "problem.g", key, value)) continue;

        if (key == "problem.gamma") cfg.problem.gamma = to_double(key, value);
        else if (key == "problem.length") cfg.problem.length = to_double(key, value);
        else if (key == "problem.cells") cfg.problem.cells = to_int(key, value);
        else if (key == "problem.final_time") cfg.problem.final_time = to_double(key, value);
        else if (key == "problem.epsilon") cfg.problem.epsilon = to_double(key, value);
        else if (key == "problem.cutoff_width") cfg.problem.cutoff_width = to_double(key, value);
        else if (key == "problem.relaxed") cfg.problem.relaxed = to_bool(key, value);
        else if (key == "scheme.c_cfl") cfg.scheme.c_cfl = to_double(key, value);
        else if (key == "scheme.splitting") cfg.scheme.splitting = parse_splitting(value);
        else if (key == "scheme.flux") cfg.scheme.flux = value;
        else if (key == "scheme.trace_order") cfg.scheme.trace_order = to_int(key, value);
        else if (key == "scheme.abort_on_truncation") cfg.scheme.abort_on_truncation = to_bool(key, value);
        else if (key == "sweep.epsilons") cfg.sweep.epsilons = parse_number_list(value);
        else if (key == "sweep.parallel") cfg.sweep.parallel = to_bool(key, value);
        else if (key == "audit.K") cfg.audit.K = to_double(key, value);
        else if (key == "audit.constant_intervals") cfg.audit.constant_intervals = to_int(key, value);
        else if (key == "audit.bln_tol") cfg.audit.bln_tol = to_double(key, value);
        else if (key == "audit.stability_tol") cfg.audit.stability_tol = to_double(key, value);
        else if (key == "audit.stability_R") cfg.audit.stability_R = to_double(key, value);
        else if (key == "audit.contraction_tol") cfg.audit.contraction_tol = to_double(key, value);
        else if (key == "audit.sweep_ratio") cfg.audit.sweep_ratio = to_double(key, value);
        else if (key == "audit.monotone_slack") cfg.audit.monotone_slack = to_double(key, value);
        else if (key == "output.dir") cfg.output.dir = value;
        else if (key == "output.stamps") cfg.output.stamps = to_int(key, value);
        else if (key == "output.formats") cfg.output.formats = split_list(value);
        else throw std::invalid_argument("config: unknown key '" + key + "'");
    }
    cfg.validate();
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    return config_from_key_values(load_key_values(path));
}

}  // namespace ohlab
