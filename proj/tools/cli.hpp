#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flagspec::cli {

enum ExitCode : int {
  kSuccess = 0,
  kNegative = 1,
  kValidation = 2,
  kUsage = 3,
  kFile = 4,
};

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flagspec::cli
