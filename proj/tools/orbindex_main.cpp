#include <iostream>
#include <vector>

#include "orbindex/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return orbindex::cli_run(args, std::cout, std::cerr);
}
