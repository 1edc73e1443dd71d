#include <iostream>
#include <string>
#include <vector>

#include "curvegenus/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return curvegenus::cli::run(args, std::cout, std::cerr);
}
