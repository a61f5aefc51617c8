#include <csp2turtle/cli.hpp>

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return csp2turtle::cli::run_batch(args, std::cin, std::cout, std::cerr);
}
