#include <iostream>

#include "dynwalk_cli/commands.hpp"

int main(int argc, char** argv) {
  return dynwalk::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
