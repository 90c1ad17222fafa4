#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tribq {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitMismatch = 1, kExitUsage = 2 };

/// Runs the CLI. `args` excludes the program name. Rendered output goes to
/// `out` (or to --out PATH), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tribq
