#include <iostream>
#include <string>
#include <vector>

#include "cubext/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  const auto r = cubext::cli::run_command(args);
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
