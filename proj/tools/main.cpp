#include <iostream>
#include <string>
#include <vector>

#include "betabranch/cli/run.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return betabranch::cli::run(args, std::cout, std::cerr);
}
