#include <iostream>
#include <string>
#include <vector>

#include "ecgraph/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ecg::run_cli(args, std::cin, std::cout, std::cerr);
}
