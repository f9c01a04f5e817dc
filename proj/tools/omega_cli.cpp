#include <iostream>

#include "omega/cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return omega::cli::cli_main(args, std::cout, std::cerr);
}
