#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "helpers.hpp"
#include "ohlab/cli.hpp"
#include "ohlab/config.hpp"
#include "ohlab/errors.hpp"
#include "ohlab/experiments.hpp"
#include "ohlab/output.hpp"
#include "ohlab/presets.hpp"
#include "ohlab/snapshot.hpp"
#include "ohlab/viscous.hpp"

using namespace ohlab;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("ohlab_test_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ExperimentConfig small_config() {
    ExperimentConfig cfg = config_from_key_values(parse_key_values(
        "problem.cells = 128\nproblem.final_time = 0.2\nproblem.epsilon = 0.05\n"
        "output.stamps = 5\nsweep.epsilons = 0.08, 0.04, 0.02\n"));
    return cfg;
}

int run_cli(const std::vector<std::string>& args, std::string* out_text = nullptr,
            std::string* err_text = nullptr) {
    std::ostringstream out, err;
    const int code = cli_main(args, out, err);
    if (out_text) *out_text = out.str();
    if (err_text) *err_text = err.str();
    return code;
}

}  // namespace

TEST_CASE("key = value parsing") {
    const KeyValues kv = parse_key_values("# comment\n a.b = 1 \n\nc = x y # tail\n");
    CHECK(kv.at("a.b") == "1");
    CHECK(kv.at("c") == "x y");
    CHECK(kv.size() == 2);
    try {
        parse_key_values("a = 1\nbroken\n");
        FAIL("expected LoadError");
    } catch (const LoadError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_key_values("a = 1\na = 2\n"), LoadError);
    CHECK_THROWS_AS(load_key_values("/nonexistent/ohlab.cfg"), LoadError);
}

TEST_CASE("config mapping and validation") {
    const ExperimentConfig d = config_from_key_values({});
    CHECK(d.problem.cells == 1024);
    CHECK(d.sweep.epsilons.size() == 4);
    CHECK(d.stability_window() == doctest::Approx(5.0));

    const ExperimentConfig c = config_from_key_values(parse_key_values(
        "problem.u0 = box\nproblem.u0.a = 0.7\nproblem.g = ramp_hold\nproblem.g.gmax = 0.3\n"
        "scheme.splitting = strang\nsweep.epsilons = 0.1 0.05 0.01\noutput.formats = csv\n"));
    CHECK(c.problem.u0.name == "box");
    CHECK(c.problem.u0.params.at("a") == 0.7);
    CHECK(c.problem.g.params.at("gmax") == 0.3);
    CHECK(c.scheme.splitting == Splitting::strang);
    CHECK(c.sweep.epsilons == std::vector<double>{0.1, 0.05, 0.01});
    CHECK(c.wants("csv"));
    CHECK_FALSE(c.wants("snapshot"));

    CHECK_THROWS_AS(config_from_key_values({{"problem.colour", "red"}}), std::invalid_argument);
    CHECK_THROWS_AS(config_from_key_values({{"problem.cells", "many"}}), std::invalid_argument);
    CHECK_THROWS_AS(config_from_key_values({{"sweep.epsilons", "0.01 0.02 0.03"}}), std::invalid_argument);
    CHECK_THROWS_AS(config_from_key_values({{"problem.u0", "nope"}}), std::invalid_argument);
    CHECK_THROWS_AS(config_from_key_values({{"problem.u0.q", "1"}}), std::invalid_argument);
    CHECK_THROWS_AS(config_from_key_values({{"scheme.trace_order", "3"}}), std::invalid_argument);
    CHECK(parse_number_list("0.08, 0.04 0.02").size() == 3);
}

TEST_CASE("presets") {
    const Grid1D g(20.0, 256);
    const ScalarField bump = make_u0({"gauss_bump", {}}, g);
    CHECK(norm_linf(bump) == doctest::Approx(1.0).epsilon(1e-2));
    CHECK(norm_l1(bump) == doctest::Approx(0.5 * std::sqrt(std::numbers::pi)).epsilon(1e-6));
    const ScalarField box = make_u0({"box", {{"a", 2.0}, {"w", 1.0}}}, g);
    CHECK(std::abs(norm_l1(box) - 2.0) <= 2.0 * 2.0 * g.dx());
    CHECK(norm_linf(make_u0({"zero", {}}, g)) == 0.0);
    const auto ramp = u0_profile({"ramp_down", {}});
    CHECK(ramp(1.0) == 1.0);
    CHECK(ramp(3.0) == doctest::Approx(0.5));
    CHECK(ramp(5.0) == 0.0);

    for (const char* name : {"zero", "ramp_hold", "sine_burst"}) {
        const BoundarySignal s = make_g({name, {}}, 1.0);
        CHECK(s(0.0) == 0.0);
        CHECK(s.sup() <= 0.5);
    }
    const BoundarySignal hold = make_g({"ramp_hold", {}}, 1.0);
    CHECK(hold.samples().size() == 4097);
    CHECK(hold(0.125) == doctest::Approx(0.25));
    CHECK(hold(0.9) == doctest::Approx(0.5));
    CHECK(hold.lipschitz() == doctest::Approx(2.0).epsilon(1e-6));
    const BoundarySignal burst = make_g({"sine_burst", {}}, 1.0);
    CHECK(std::abs(burst(0.9) - burst(0.5)) <= 1e-12);
    CHECK_THROWS_AS(check_g_preset({"gauss_bump", {}}), std::invalid_argument);
    CHECK_THROWS_AS(check_u0_preset({"ramp_hold", {}}), std::invalid_argument);

    const ExperimentConfig cfg = config_from_key_values({});
    const ProblemSpec spec = make_problem(cfg, 0.02);
    CHECK(spec.epsilon == 0.02);
    CHECK_NOTHROW(require_admissible(spec));
}

TEST_CASE("snapshot round trip is bit exact") {
    ExperimentConfig cfg = small_config();
    const SolveResult res = run_solve(cfg);
    const std::string text = snapshot_text(res.traj, config_echo(cfg));
    const SnapshotFile back = parse_snapshot(text);
    CHECK(back.trajectory == res.traj);
    CHECK(back.header.at("schema_version") == kSnapshotSchemaVersion);
    CHECK(snapshot_text(back.trajectory, config_echo(cfg)) == text);

    const fs::path dir = scratch("snapshot");
    write_snapshot(res.traj, (dir / "s.jsonl").string());
    CHECK(read_snapshot((dir / "s.jsonl").string()).trajectory == res.traj);
    CHECK_THROWS_AS(read_snapshot((dir / "missing.jsonl").string()), LoadError);
}

TEST_CASE("snapshot load errors") {
    const Grid1D g(20.0, 32);
    const Trajectory t = testing::frozen_trajectory(ScalarField::constant(g, 0.25), 0.0, 0.25,
                                                    uniform_stamps(1.0, 4), 0.5);
    const std::string text = snapshot_text(t);
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) lines.push_back(l);
    REQUIRE(lines.size() == 5);
    const auto join = [](const std::vector<std::string>& v) {
        std::string s;
        for (const auto& l : v) s += l + "\n";
        return s;
    };
    const auto message = [](const std::string& s) {
        try {
            parse_snapshot(s);
        } catch (const LoadError& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };

    std::vector<std::string> cut(lines.begin(), lines.end() - 1);
    CHECK(message(join(cut)).find("record 3") != std::string::npos);
    std::vector<std::string> half = lines;
    half[3] = half[3].substr(0, half[3].size() / 2);
    CHECK(message(join(half)).find("record 2") != std::string::npos);

    nlohmann::json h = nlohmann::json::parse(lines[0]);
    h["schema_version"] = 99;
    std::vector<std::string> schema = lines;
    schema[0] = h.dump();
    CHECK(message(join(schema)).find("unsupported schema") != std::string::npos);

    nlohmann::json r = nlohmann::json::parse(lines[2]);
    r["u"].erase(0);
    std::vector<std::string> grid = lines;
    grid[2] = r.dump();
    CHECK(message(join(grid)).find("grid mismatch") != std::string::npos);
}

TEST_CASE("outputs are deterministic") {
    ExperimentConfig cfg = small_config();
    cfg.sweep.parallel = true;
    const SweepReport a = run_epsilon_sweep(cfg);
    cfg.sweep.parallel = false;
    const SweepReport b = run_epsilon_sweep(cfg);
    CHECK(a.complete());
    CHECK(sweep_csv(a) == sweep_csv(b));
    CHECK(sweep_json(a).dump() == sweep_json(b).dump());
    CHECK(a.d.size() == 2);
    CHECK(a.e.size() == 3);
    CHECK(sweep_csv(a).rfind("epsilon,d_k,e_k\n", 0) == 0);

    cfg.problem.epsilon = 0.0;
    const SolveResult s1 = run_solve(cfg);
    const SolveResult s2 = run_solve(cfg);
    CHECK(diagnostics_csv(s1.traj) == diagnostics_csv(s2.traj));
    CHECK(to_json(s1.audit).dump() == to_json(s2.audit).dump());

    const StabilityExperiment e1 = run_stability_experiment(cfg);
    const StabilityExperiment e2 = run_stability_experiment(cfg);
    CHECK(stability_csv(e1.result) == stability_csv(e2.result));
    CHECK(e1.result.rows.size() == 4);

    CHECK_THROWS_AS(run_epsilon_sweep(config_from_key_values({{"sweep.epsilons", "0.1 0.05"}})),
                    std::invalid_argument);
    CHECK(format_number(0.1) == "1.000000000000e-01");
}

TEST_CASE("command line") {
    std::string out, err;
    CHECK(run_cli({"riemann"}, &out) == kExitPass);
    CHECK(out ==
          "uL,uR,flux\n"
          "5.000000000000e-01,5.000000000000e-01,1.250000000000e-01\n"
          "1.000000000000e+00,-1.000000000000e+00,5.000000000000e-01\n"
          "-1.000000000000e+00,1.000000000000e+00,0.000000000000e+00\n");

    CHECK(run_cli({"solve", "--bogus"}, nullptr, &err) == kExitUsage);
    CHECK(run_cli({}, nullptr, &err) == kExitUsage);
    CHECK(run_cli({"sweep", "--eps", "0.1,0.05"}, nullptr, &err) == kExitUsage);
    CHECK(err.find("at least 3") != std::string::npos);
    CHECK(run_cli({"solve", "--config", "/nonexistent.cfg"}, nullptr, &err) == kExitUsage);

    const fs::path dir = scratch("cli");
    {
        std::ofstream cfg(dir / "run.cfg");
        cfg << "problem.cells = 128\nproblem.final_time = 0.2\nproblem.epsilon = 0\n"
               "problem.u0 = zero\noutput.stamps = 5\n";
    }
    const std::string outdir = (dir / "out").string();
    CHECK(run_cli({"solve", "--config", (dir / "run.cfg").string(), "--out", outdir, "--quiet"}, &out) ==
          kExitPass);
    CHECK(out == "all checks passed\n");
    for (const char* f : {"snapshot.jsonl", "diagnostics.csv", "audit.json", "manifest.json"}) {
        CHECK_MESSAGE(fs::exists(fs::path(outdir) / f), f);
    }
    const nlohmann::json manifest = nlohmann::json::parse(read_file(fs::path(outdir) / "manifest.json"));
    CHECK(manifest.contains("command"));
    CHECK(manifest.dump().find("runtime_s") != std::string::npos);
    CHECK(manifest.dump().find("splitting") != std::string::npos);
    CHECK(manifest.dump().find("entropy_K") != std::string::npos);

    CHECK(run_cli({"verify", (fs::path(outdir) / "snapshot.jsonl").string()}, &out) == kExitPass);
    CHECK(out.find("entropy_residual") != std::string::npos);
    CHECK(run_cli({"verify", (dir / "none.jsonl").string()}, nullptr, &err) == kExitUsage);

    // Only the requested formats are written.
    {
        std::ofstream cfg(dir / "viscous.cfg");
        cfg << "problem.cells = 128\nproblem.final_time = 0.1\nproblem.epsilon = 0.05\n"
               "output.stamps = 3\noutput.formats = csv\n";
    }
    const std::string vout = (dir / "vout").string();
    run_cli({"solve", "--config", (dir / "viscous.cfg").string(), "--out", vout}, &out);
    CHECK(fs::exists(fs::path(vout) / "diagnostics.csv"));
    CHECK_FALSE(fs::exists(fs::path(vout) / "snapshot.jsonl"));
    CHECK(out.find("l2_identity") != std::string::npos);
}
