#include <iostream>

#include "qpoly/cli.hpp"

int main(int argc, char** argv) {
  return qpoly::cli::main(argc, argv, std::cin, std::cout, std::cerr);
}
