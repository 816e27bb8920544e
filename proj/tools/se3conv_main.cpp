#include <iostream>
#include <string>
#include <vector>

#include "se3conv/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return se3conv::run_cli(args, std::cout, std::cerr);
}
