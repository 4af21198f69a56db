#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rrcode::cli {

// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kUsage = 2,
  kDataError = 3,
};

// Runs the command line `args` (args[0] is the program name) and returns the
// exit code. Subcommands: ragm, tables, capacity, encode, decode, verify,
// stats.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rrcode::cli
