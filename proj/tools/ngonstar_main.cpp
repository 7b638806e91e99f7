#include <iostream>

#include "ngonstar/cli.hpp"

int main(int argc, char** argv) {
  return ngonstar::run_cli(argc, argv, std::cout, std::cerr);
}
