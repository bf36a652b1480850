#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fricke::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
};

/// Runs one command line. `args` includes the program name as args[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fricke::cli
