#include <iostream>
#include <string>
#include <vector>

#include "rwci/cli.hpp"

int main(int argc, char** argv) {
  return rwci::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
