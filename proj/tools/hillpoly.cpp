#include <iostream>

#include "hillpoly/cli.hpp"

int main(int argc, char** argv) {
  return hillpoly::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
