#pragma once

// Command-line front end. Exit codes: 0 ok, 1 assertion failure, 2 usage error, 3 computational error.

#include <iosfwd>
#include <string>
#include <vector>

namespace bricklab {

enum ExitCode : int { kExitOk = 0, kExitAssertion = 1, kExitUsage = 2, kExitComputation = 3 };

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bricklab
