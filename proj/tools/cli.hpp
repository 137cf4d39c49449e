#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace flagcodes::cli {

enum ExitCode : int {
  kOk = 0,
  kIoError = 1,
  kBadParameters = 2,
  kParseError = 3,
};

/// Runs the command line `args` (without the program name), writing JSON
/// and tables to `out` and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flagcodes::cli
