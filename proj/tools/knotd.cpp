#include <iostream>

#include "knotd/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return knotd::cli::run_command(std::move(args), std::cout, std::cerr);
}
