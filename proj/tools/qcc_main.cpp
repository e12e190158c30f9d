#include <iostream>

#include "qcc/cli.hpp"

int main(int argc, char** argv) {
  return qcc::run_cli(argc, argv, std::cout, std::cerr);
}
