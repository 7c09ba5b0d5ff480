#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace holext {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitPass = 0,
  kExitFail = 1,
  kExitInconclusive = 2,
  kExitMathError = 3,
  kExitConfigError = 64,
};

/// Runs one command; `args` excludes the program name. Reports go to `out` (or --out),
/// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace holext
