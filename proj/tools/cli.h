#pragma once

// Command-line driver. Exit codes: 0 success, 1 runtime failure, 2 usage.

#include <iosfwd>
#include <string>
#include <vector>

namespace specsparse::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// args[0] is the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace specsparse::cli
