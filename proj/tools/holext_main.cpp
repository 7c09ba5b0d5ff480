#include <iostream>
#include <string>
#include <vector>

#include "holext/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return holext::run_cli(args, std::cout, std::cerr);
}
