#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hurwitz::cli {

/// Exit codes: 0 success, 1 malformed arguments, 2 mathematical failure
/// detected (e.g. `verify --dim 16`).
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitFailed = 2;

/// Runs the command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hurwitz::cli
