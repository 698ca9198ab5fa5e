#include <iostream>
#include <string>
#include <vector>

#include "bentcert/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return bentcert::run_command(args, std::cout, std::cerr);
}
