#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bentcert {

/// Exit statuses of the command-line front end.
enum ExitCode : int {
  kExitPass = 0,
  kExitCheckFailed = 1,  // a mathematical check failed; witness in the report
  kExitUsage = 2,        // bad arguments or input
};

/// Runs one CLI invocation. args excludes the program name. Reports go to
/// `out` (or to --emit), diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bentcert
