#include <iostream>
#include <string>
#include <vector>

#include "joindet/commands.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return joindet::run_command(args, std::cout, std::cerr);
}
