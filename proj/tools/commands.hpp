#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pdm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitRejected = 2;

/// Runs one command line (without the program name) and returns the process exit code.
/// Data goes to `out` unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pdm::cli
