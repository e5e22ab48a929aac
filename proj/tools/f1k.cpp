#include <iostream>
#include <string>
#include <vector>

#include "f1k/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return f1k::cli::run(std::move(args), std::cout, std::cerr);
}
