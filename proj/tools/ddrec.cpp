#include <iostream>

#include "ddrec/cli.hpp"

int main(int argc, char** argv) {
  return ddrec::cli::run_command_line(argc, argv, std::cout, std::cerr);
}
