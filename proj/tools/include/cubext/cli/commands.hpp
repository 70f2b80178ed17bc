#pragma once

#include <string>
#include <vector>

#include "cubext/error.hpp"

namespace cubext::cli {

struct CommandResult {
  int exit_code = 0;
  std::string out;  // empty whenever exit_code != 0
  std::string err;
};

enum ExitCode : int { kOk = 0, kUsage = 2, kMath = 3, kSize = 4 };

int exit_code_for(Errc c);

/// argv[0] is the program name.
CommandResult run_command(const std::vector<std::string>& argv);

}  // namespace cubext::cli
