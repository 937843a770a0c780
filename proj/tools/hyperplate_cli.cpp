#include <iostream>

#include "hyperplate/cli.hpp"

int main(int argc, char** argv) {
  return hyperplate::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
