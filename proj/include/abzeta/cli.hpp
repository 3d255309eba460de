#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace abzeta {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDisagreement = 2;
inline constexpr int kExitDomain = 3;

/// Runs the command line `abzeta <args...>` (args exclude the program name),
/// writing the report to out and diagnostics to err. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace abzeta
