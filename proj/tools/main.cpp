#include <iostream>

#include "simplexbound/cli.hpp"

int main(int argc, char** argv) {
  return simplexbound::run_cli(argc, argv, std::cout, std::cerr);
}
