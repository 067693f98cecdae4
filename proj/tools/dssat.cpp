#include <iostream>

#include "dssat/cli.hpp"

int main(int argc, char** argv) {
  return dssat::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
