#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace sqfree::cli {

enum ExitCode : int {
  kTrue = 0,
  kFalse = 1,
  kUsage = 2,
  kBudget = 3,
};

/// Runs the command line `args` (without the program name), writing results
/// to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Parses a budget such as "100000", "1e8" or "2.5e6". Throws
/// std::invalid_argument for negative, fractional or out-of-range values.
std::uint64_t parse_budget(const std::string& text);

}  // namespace sqfree::cli
