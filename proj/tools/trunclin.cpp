#include <iostream>
#include <string>
#include <vector>

#include "trunclin/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return trunclin::cli::run(args, std::cout, std::cerr);
}
