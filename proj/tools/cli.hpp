#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace k3fib::cli {

enum ExitCode { kOk = 0, kMismatch = 1, kUsage = 2 };

/// Runs one command line (without the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace k3fib::cli
