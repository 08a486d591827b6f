#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace vogel::cli {

enum ExitCode : int {
  kOk = 0,
  kScanFailed = 1,
  kParse = 2,
  kSingular = 3,
  kIrregular = 4,
  kUnresolvable = 5,
};

/// Runs the command line in-process; argv[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vogel::cli
