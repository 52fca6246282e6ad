#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wetpaper::cli {

enum ExitCode : int {
  kOk = 0,
  kCapacity = 2,
  kParseOrIo = 3,
  kUsage = 4,
};

/// Runs one command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wetpaper::cli
