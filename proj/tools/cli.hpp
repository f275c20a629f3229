#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kakutani::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kResource = 3,
  kVerificationFailed = 4,
};

/// Runs the command line `args` (without the program name). Normal output
/// goes to `out` unless --out redirects it to a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kakutani::cli
