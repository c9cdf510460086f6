#include <iostream>
#include <string>
#include <vector>

#include "hicomm/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hicomm::run_command(args, std::cout, std::cerr);
}
