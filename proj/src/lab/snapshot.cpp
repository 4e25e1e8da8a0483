#include "ohlab/snapshot.hpp"

#include <fstream>
#include <sstream>

#include "ohlab/errors.hpp"

namespace ohlab {

using nlohmann::json;

namespace {

json diag_to_json(const StampDiagnostics& d) {
    return {{"u_l1", d.u_l1},       {"u_l2", d.u_l2},       {"u_linf", d.u_linf},
            {"p_l1", d.p_l1},       {"p_l2", d.p_l2},       {"p_linf", d.p_linf},
            {"dxp0", d.dxp0},       {"eps_dxp0", d.eps_dxp0}, {"dxu0", d.dxu0},
            {"p_integral", d.p_integral}, {"tail", d.tail}};
}

StampDiagnostics diag_from_json(const json& j) {
    StampDiagnostics d;
    d.u_l1 = j.at("u_l1").get<double>();
    d.u_l2 = j.at("u_l2").get<double>();
    d.u_linf = j.at("u_linf").get<double>();
    d.p_l1 = j.at("p_l1").get<double>();
    d.p_l2 = j.at("p_l2").get<double>();
    d.p_linf = j.at("p_linf").get<double>();
    d.dxp0 = j.at("dxp0").get<double>();
    d.eps_dxp0 = j.at("eps_dxp0").get<double>();
    d.dxu0 = j.at("dxu0").get<double>();
    d.p_integral = j.at("p_integral").get<double>();
    d.tail = j.at("tail").get<double>();
    return d;
}

}  // namespace

std::string snapshot_text(const Trajectory& traj, const json& echo) {
    traj.validate();
    json header = {{"schema_version", kSnapshotSchemaVersion},
                   {"kind", "ohlab.snapshot"},
                   {"grid", {{"length", traj.grid.length()}, {"cells", traj.grid.cells()}}},
                   {"gamma", traj.gamma},
                   {"epsilon", traj.epsilon},
                   {"trace_order", traj.trace_order},
                   {"truncation_warning", traj.truncation_warning},
                   {"records", traj.size()},
                   {"echo", echo}};
    std::ostringstream os;
    os << header.dump() << '\n';
    for (std::size_t k = 0; k < traj.size(); ++k) {
        const auto u = traj.u[k].values();
        const auto p = traj.p[k].values();
        json rec = {{"index", k},
                    {"t", traj.times[k]},
                    {"u", std::vector<double>(u.begin(), u.end())},
                    {"p", std::vector<double>(p.begin(), p.end())},
                    {"trace", traj.trace[k]},
                    {"g", traj.boundary[k]},
                    {"diag", diag_to_json(traj.diagnostics[k])}};
        os << rec.dump() << '\n';
    }
    return os.str();
}

void write_snapshot(const Trajectory& traj, const std::string& path, const json& echo) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write snapshot '" + path + "'");
    out << snapshot_text(traj, echo);
    if (!out) throw std::runtime_error("short write to snapshot '" + path + "'");
}

SnapshotFile parse_snapshot(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line)) throw LoadError("snapshot is empty");
    json header;
    try {
        header = json::parse(line);
    } catch (const json::exception& e) {
        throw LoadError(std::string("snapshot header is corrupt: ") + e.what());
    }
    if (!header.is_object() || !header.contains("schema_version") ||
        header["schema_version"] != kSnapshotSchemaVersion) {
        throw LoadError("unsupported schema: expected version " +
                        std::to_string(kSnapshotSchemaVersion) + ", found " +
                        (header.is_object() && header.contains("schema_version")
                             ? header["schema_version"].dump()
                             : std::string("none")));
    }

    std::size_t records = 0;
    double length = 0.0;
    int cells = 0;
    Trajectory traj{Grid1D(1.0, Grid1D::kMinCells)};
    try {
        records = header.at("records").get<std::size_t>();
        length = header.at("grid").at("length").get<double>();
        cells = header.at("grid").at("cells").get<int>();
        traj = Trajectory(Grid1D(length, cells));
        traj.gamma = header.at("gamma").get<double>();
        traj.epsilon = header.at("epsilon").get<double>();
        traj.trace_order = header.at("trace_order").get<int>();
        traj.truncation_warning = header.at("truncation_warning").get<bool>();
    } catch (const std::exception& e) {
        throw LoadError(std::string("snapshot header is incomplete: ") + e.what());
    }

    for (std::size_t k = 0; k < records; ++k) {
        const std::string where = "snapshot record " + std::to_string(k);
        if (!std::getline(is, line)) throw LoadError(where + " is missing (file truncated)");
        try {
            const json rec = json::parse(line);
            if (rec.at("index").get<std::size_t>() != k) throw LoadError(where + " is out of order");
            auto u = rec.at("u").get<std::vector<double>>();
            auto p = rec.at("p").get<std::vector<double>>();
            if (u.size() != static_cast<std::size_t>(cells) ||
                p.size() != static_cast<std::size_t>(cells)) {
                throw LoadError(where + ": grid mismatch (" + std::to_string(u.size()) +
                                " values for " + std::to_string(cells) + " cells)");
            }
            traj.append(rec.at("t").get<double>(), ScalarField(traj.grid, std::move(u)),
                        ScalarField(traj.grid, std::move(p)), rec.at("trace").get<double>(),
                        rec.at("g").get<double>(), diag_from_json(rec.at("diag")));
        } catch (const LoadError&) {
            throw;
        } catch (const std::exception& e) {
            throw LoadError(where + " is corrupt: " + e.what());
        }
    }
    if (std::getline(is, line) && !line.empty()) {
        throw LoadError("snapshot has " + std::string("data beyond the ") + std::to_string(records) +
                        " declared records");
    }
    return {std::move(header), std::move(traj)};
}

SnapshotFile read_snapshot(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw LoadError("cannot open snapshot '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_snapshot(ss.str());
}

}  // namespace ohlab
