#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rsstl::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,          // success, SAT, NOT-FALSIFIED
  kViolation = 1,   // FALSIFIED (monitor) or FOUND (falsify)
  kError = 2,       // usage or data error
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace rsstl::cli
