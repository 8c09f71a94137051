#include <iostream>
#include <string>
#include <vector>

#include "meanbounds/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return meanbounds::run_cli(args, std::cout, std::cerr);
}
