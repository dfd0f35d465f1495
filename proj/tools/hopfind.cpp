#include <iostream>
#include <string>
#include <vector>

#include "hopfind/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hopfind::runCommand(args, std::cout, std::cerr);
}
