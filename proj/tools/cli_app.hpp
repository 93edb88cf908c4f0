#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace signbound::cli {

enum ExitCode : int { kOk = 0, kViolation = 1, kBadInput = 2 };

/// Runs the command line `args` (without the program name). Reports go to
/// out unless --output names a file; diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace signbound::cli
