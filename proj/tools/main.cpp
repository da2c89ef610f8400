#include <iostream>
#include <vector>

#include "iipm/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return iipm::run_cli(args, std::cout, std::cerr);
}
