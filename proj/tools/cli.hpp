#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ofl::cli {

/// Process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kUsage = 1,
  kParse = 2,
  kResourceCap = 3,
  kWitnessFound = 4,
};

/// Runs one command line (without the program name). The primary document
/// goes to `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ofl::cli
