#pragma once

#include <string>

#include <json.hpp>
#include "ohlab/trajectory.hpp"

namespace ohlab {

/// JSON Lines: one header object, then one object per stored stamp.
inline constexpr int kSnapshotSchemaVersion = 1;

struct SnapshotFile {
    nlohmann::json header;  // schema_version, grid, records, echo
    Trajectory trajectory;
};

/// echo is stored verbatim in the header (problem and scheme description).
void write_snapshot(const Trajectory& traj, const std::string& path,
                    const nlohmann::json& echo = nlohmann::json::object());
std::string snapshot_text(const Trajectory& traj, const nlohmann::json& echo = nlohmann::json::object());

/// Throws LoadError: "unsupported schema" on a version mismatch, the record
/// index for a corrupt or missing record, "grid mismatch" for a record whose
/// length disagrees with the header grid.
SnapshotFile read_snapshot(const std::string& path);
SnapshotFile parse_snapshot(const std::string& text);

}  // namespace ohlab
