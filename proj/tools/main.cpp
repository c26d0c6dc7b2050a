#include <iostream>
#include <string>
#include <vector>

#include "unitarea/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return unitarea::run(args, std::cout, std::cerr);
}
