#include <iostream>
#include <string>
#include <vector>

#include "riemann_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return riemann::cli::run(args, std::cout, std::cerr, riemann::cli::Environment::from_process());
}
