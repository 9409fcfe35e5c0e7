#include <iostream>
#include <string>
#include <vector>

#include "ocreason/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ocreason::run_cli(args, std::cout, std::cerr);
}
