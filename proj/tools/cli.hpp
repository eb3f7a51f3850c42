#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stirlingb::cli {

enum ExitCode : int { kPass = 0, kIdentityFailure = 1, kUsage = 2 };

/// Runs the command line `args` (without the program name). Output goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stirlingb::cli
