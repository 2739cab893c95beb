#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ssc::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kCapacityError = 2,
  kVerificationMismatch = 3,
};

// Runs the `jahangir` command line; `args` excludes the program name.
// Documents go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ssc::cli
