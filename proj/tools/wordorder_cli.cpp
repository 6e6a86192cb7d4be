#include <iostream>
#include <string>
#include <vector>

#include "wordorder/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return wordorder::cli::run(std::move(args), std::cout, std::cerr);
}
