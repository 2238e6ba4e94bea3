#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace turan::cli {

enum ExitCode : int {
  kOk = 0,
  kPrecondition = 1,
  kParseOrIo = 2,
  kSizeLimit = 3,
  kInternal = 4,
};

// Runs one command line (without the program name). Results go to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Quick invariant suite behind `selfcheck`; one line per check.
bool selfcheck(std::ostream& out);

}  // namespace turan::cli
