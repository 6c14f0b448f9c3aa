#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace copos::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitCopositive = 0;      // check: copositive; verify: valid certificate
inline constexpr int kExitNotCopositive = 1;   // check/certify: not copositive; verify: invalid
inline constexpr int kExitUsage = 2;           // usage, parse, I/O or dimension errors
inline constexpr int kExitNoCertificate = 3;   // certify: input is copositive

/// Runs the command line `args` (without the program name), writing reports
/// to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace copos::cli
