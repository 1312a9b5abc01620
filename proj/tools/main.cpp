#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  return nsmean::cli::run_cli(nsmean::cli::collect_args(argc, argv), std::cout, std::cerr);
}
