#include <iostream>
#include <string>
#include <vector>

#include "hilden/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hilden::run_cli(args, std::cout, std::cerr);
}
