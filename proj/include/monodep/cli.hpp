#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace monodep {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitUsage = 2 };

/// Runs the monodep command line; args excludes the program name.
/// Reports go to out, diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace monodep
