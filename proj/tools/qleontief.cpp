#include <iostream>
#include <string>
#include <vector>

#include "qleontief/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return qleontief::cli::run(args, std::cout, std::cerr);
}
