#include <iostream>
#include <string>
#include <vector>

#include "f5b/cli.hpp"

int main(int argc, char** argv) {
  return f5b::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
