#ifndef ICOL_TOOLS_CLI_H_
#define ICOL_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace icol::cli {

// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kBadInput = 2,
  kNotTree = 3,
  kSizeLimit = 4,
  kInfeasible = 5,
};

// Runs one invocation. `args` excludes the program name. Machine output goes
// to `out`, diagnostics to `err`.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace icol::cli

#endif  // ICOL_TOOLS_CLI_H_
