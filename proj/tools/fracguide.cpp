#include <iostream>
#include <string>
#include <vector>

#include "fracguide/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return fracguide::cli::main_entry(args, std::cout, std::cerr);
}
