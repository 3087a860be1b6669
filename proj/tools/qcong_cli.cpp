#include <iostream>
#include <string>
#include <vector>

#include "qcong/runner.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qcong::run_cli(args, std::cout, std::cerr);
}
