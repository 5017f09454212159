#include <iostream>
#include <string>
#include <vector>

#include "srk_cli/dispatch.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return srk_cli::dispatch(std::move(args), std::cout, std::cerr);
}
