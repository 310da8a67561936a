#include <iostream>
#include <string>
#include <vector>

#include "spath/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return spath::cli_main(std::move(args), std::cout, std::cerr);
}
