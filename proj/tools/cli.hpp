#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace trajnet::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 2;
inline constexpr int kExitUsage = 64;

/// Runs the command line `args` (args[0] is the program name). Documents go
/// to `out`, diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trajnet::cli
