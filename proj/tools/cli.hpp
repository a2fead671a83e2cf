#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mzi::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;
inline constexpr int kUsage = 2;

// Runs the command line `args` (without the program name), writing results
// to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mzi::cli
