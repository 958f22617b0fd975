#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nilgeo::cli {

/// Exit codes of the nilgeo tool.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,          // bad arguments or failed precondition
  kSolverFailure = 2,  // some geodesic could not be found
};

/// Runs one invocation. `args` excludes the program name. Results go to
/// `out` (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nilgeo::cli
