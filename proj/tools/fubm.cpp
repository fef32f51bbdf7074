#include <iostream>
#include <string>
#include <vector>

#include "fubm/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return fubm::run_cli(args, std::cout, std::cerr);
}
