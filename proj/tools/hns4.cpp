#include <iostream>
#include <string>
#include <vector>

#include "hns4/cli/app.hpp"

int main(int argc, char **argv) {
  return hns4::cli::run(std::vector<std::string>(argv, argv + argc), std::cin, std::cout,
                        std::cerr);
}
