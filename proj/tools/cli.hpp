#pragma once

#include <string>
#include <vector>

namespace tarski::cli {

struct CommandOutcome {
  /// 0 every requested check passed, 1 a check failed, 2 usage error.
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// `args` excludes the program name.
CommandOutcome run(const std::vector<std::string>& args);

}  // namespace tarski::cli
