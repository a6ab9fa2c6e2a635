#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace burn::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerifyFailed = 1;
inline constexpr int kInputError = 2;
inline constexpr int kPreconditionError = 3;

/// Runs the command line `args` (args[0] is the program name) writing the
/// report to `out` and diagnostics to `err`; returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace burn::cli
