#include <cstdio>

#include "gorcol/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  gorcol::CommandOutcome out = gorcol::run_command(args);
  std::fputs(out.output.c_str(), stdout);
  return out.exit_code;
}
