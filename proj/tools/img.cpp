#include <iostream>

#include "img/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return img::cli::run(args, std::cout, std::cerr);
}
