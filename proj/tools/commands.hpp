#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace answerrank::cli {

// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kRejected = 1,
  kInputError = 2,
  kCapExceeded = 3,
  kHeuristicFailed = 4,
  kRingless = 5,
};

// Runs one command line (without the program name). Result documents go to
// files named by flags or to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace answerrank::cli
