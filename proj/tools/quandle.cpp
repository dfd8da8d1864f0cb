#include <iostream>
#include <string>
#include <vector>

#include "quandles/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return quandles::cli::run(args, std::cout, std::cerr);
}
