#include <iostream>
#include <string>
#include <vector>

#include "z2ph/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return z2ph::cli::run(args, std::cout, std::cerr);
}
