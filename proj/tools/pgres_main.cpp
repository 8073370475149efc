#include <iostream>

#include "pgres/cli.hpp"

int main(int argc, char** argv) {
  return pgres::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
