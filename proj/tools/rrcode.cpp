#include <iostream>
#include <string>
#include <vector>

#include "rrcode/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return rrcode::cli::run(args, std::cout, std::cerr);
}
