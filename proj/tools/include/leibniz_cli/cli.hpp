#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace leibniz::cli {

enum ExitCode : int {
  kSuccess = 0,
  kPropertyFalse = 1,
  kInputError = 2,
  kSearchExhausted = 3,
};

// Runs one command line (without the program name). Reports go to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace leibniz::cli
