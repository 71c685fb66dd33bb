#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hconvex::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailedVerdict = 1,
  kExitUsage = 2,
  kExitNumeric = 3,
};

/// Runs one command line (without the program name). Human tables go to
/// `out`, diagnostics to `err`; machine reports go to the --out path.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hconvex::cli
