#include <iostream>
#include <string>
#include <vector>

#include "jacobsthal/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return jacobsthal::run_cli(args, std::cout, std::cerr);
}
