#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cubeconf::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kUsage = 2,
  kParse = 3,
  kBudget = 4,
  kSelfLoop = 5,
  kUnreachable = 6,
};

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cubeconf::cli
