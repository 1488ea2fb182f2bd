#include <iostream>
#include <string>
#include <vector>

#include "flame/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return flame::cli::run(args, std::cout, std::cerr);
}
