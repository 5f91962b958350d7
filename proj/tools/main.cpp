#include <iostream>
#include <string>
#include <vector>

#include "dlambert/cli.hpp"

int main(int argc, char** argv) {
  return dlambert::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
