#include <iostream>
#include <string>
#include <vector>

#include "transit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return transit::run_cli(args, std::cout, std::cerr);
}
