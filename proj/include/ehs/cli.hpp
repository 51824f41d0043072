#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ehs {

/// Exit codes: 0 PASS (or a successful eval), 1 FAIL, 2 parse, config or
/// constraint error, 3 pole error.
enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitUsage = 2, kExitPole = 3 };

/// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ehs
