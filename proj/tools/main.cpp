#include <iostream>

#include "cli_main.hpp"

int main(int argc, char** argv) {
  return nsgp::cli::run(argc, argv, std::cout, std::cerr);
}
