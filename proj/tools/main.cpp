#include <iostream>
#include <vector>

#include "k3fm/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return k3fm::run_cli(std::move(args), std::cout, std::cerr);
}
