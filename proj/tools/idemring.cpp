#include <iostream>

#include "idemring/cli.hpp"

int main(int argc, char** argv) {
  return idemring::run(argc, argv, std::cout, std::cerr);
}
