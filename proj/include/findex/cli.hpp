#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace findex {

// Exit statuses of the command-line front end.
inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;  // runtime error or verification mismatch
inline constexpr int exit_usage = 2;    // bad command line

/// Runs the CLI with `args` (program name excluded), writing to `out` / `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace findex
