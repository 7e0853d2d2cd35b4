#include <iostream>
#include <string>
#include <vector>

#include "tdm/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return tdm::cli::run_command(args, std::cout, std::cerr);
}
