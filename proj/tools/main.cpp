#include <iostream>

#include "groupdist/cli.hpp"

int main(int argc, char** argv) {
  return groupdist::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
