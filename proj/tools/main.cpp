#include <iostream>
#include <string>
#include <vector>

#include "rellandau/app/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return rellandau::app::run_cli(args, std::cout, std::cerr);
}
