#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nilcx::cli {

enum ExitCode : int { kComputed = 0, kNegative = 1, kInputError = 2 };

/// Runs one command line (without the program name) and returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nilcx::cli
