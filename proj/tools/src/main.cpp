#include <iostream>

#include "stacklab_cli/cli.hpp"

int main(int argc, char** argv) {
  return stacklab::cli::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
