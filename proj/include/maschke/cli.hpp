#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace maschke {

/// Exit codes of the command-line front end.
enum ExitStatus : int {
  kExitPass = 0,
  kExitClaimFailed = 1,  ///< some executed claim failed, or an I/O error
  kExitUsage = 2,
};

/// Runs the tool on `args` (without the program name). Reports go to `out`
/// (or to --output), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace maschke
