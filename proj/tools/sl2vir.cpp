#include <iostream>
#include <string>
#include <vector>

#include "sl2vir/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sl2vir::parse_and_run(args, std::cout, std::cerr);
}
