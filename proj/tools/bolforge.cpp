#include <iostream>

#include "bolforge/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return bolforge::run_cli(args, std::cout, std::cerr);
}
