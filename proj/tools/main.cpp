#include <iostream>
#include <string>
#include <vector>

#include "cpcq/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return cpcq::cli::run(args, std::cout, std::cerr);
}
