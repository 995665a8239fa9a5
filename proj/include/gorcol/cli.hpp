#pragma once

#include <string>
#include <vector>

namespace gorcol {

struct CommandOutcome {
  int exit_code = 0;  // 0 all checks pass, 1 assertion failure, 2 usage
  std::string output;
};

/// Executes one command line (without the program name) and renders the
/// report. Never throws; failures are encoded in the exit code.
CommandOutcome run_command(const std::vector<std::string>& args);

}  // namespace gorcol
