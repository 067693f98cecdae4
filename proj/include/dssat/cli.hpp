#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dssat {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailed = 1,  // a check failed or a conjecture point was refuted
  kExitUsage = 2,
  kExitIncomplete = 3,  // node budget or level cap hit before an exact answer
};

/// Runs one command. `args` excludes the program name. Reports go to `out`,
/// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dssat
