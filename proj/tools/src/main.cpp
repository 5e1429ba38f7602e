#include <iostream>
#include <string>
#include <vector>

#include "involution_lab_cli/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return involution_lab::cli::run(args, std::cout, std::cerr);
}
