#include <iostream>
#include <string>
#include <vector>

#include "flipcount/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return flipcount::run_cli(args, std::cout, std::cerr);
}
