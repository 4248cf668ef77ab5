#pragma once

#include <string>
#include <vector>

namespace reisner {

struct CliResult {
  int exit_code = 0;  // 0 pass/recorded, 1 fail, 2 precondition or usage
  std::string output;
};

/// Command-line front end.  `args` excludes the program name.  Identical
/// arguments (including --seed) produce identical output bytes.
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace reisner
