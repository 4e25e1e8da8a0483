#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ohlab {

inline constexpr int kExitPass = 0;
inline constexpr int kExitAuditFailure = 1;
inline constexpr int kExitUsage = 2;

/// Subcommands: solve, sweep, stability, verify <snapshot>, riemann.
/// args excludes the program name.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int cli_main(int argc, char** argv);

}  // namespace ohlab
