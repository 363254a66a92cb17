#include <iostream>
#include <string>
#include <vector>

#include "bitwist_cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return bitwist::cli::run_command(args, std::cout, std::cerr);
}
