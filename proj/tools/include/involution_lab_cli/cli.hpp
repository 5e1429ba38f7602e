#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace involution_lab::cli {

enum ExitCode : int {
  kPass = 0,
  kVerificationFailure = 1,
  kUsageError = 2,
  kInconclusive = 3,
};

/// Runs the command line `args` (args[0] is the program name). Data goes to
/// `out` unless --output names a file; diagnostics and progress go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace involution_lab::cli
