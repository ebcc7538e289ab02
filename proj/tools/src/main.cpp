#include <iostream>
#include <string>
#include <vector>

#include "trivdiag/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return trivdiag::cli::dispatch(args, std::cout, std::cerr);
}
