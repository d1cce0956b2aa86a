// Entry point for the bggv tool; all behaviour lives in the library so the
// driver can be exercised from tests.
#include <iostream>
#include <string>
#include <vector>

#include "bgg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return bgg::run_cli(args, std::cout, std::cerr);
}
