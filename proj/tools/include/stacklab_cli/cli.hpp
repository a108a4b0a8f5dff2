#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stacklab::cli {

// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kSafetyBound = 3,
  kIo = 4,
};

// Runs the stacklab command line. args excludes the program name. Results go to out
// (or to --out), diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stacklab::cli
