#include <iostream>

#include "hilbert_forms/cli.hpp"

int main(int argc, char** argv) {
  return hforms::cli::run(argc, argv, std::cout, std::cerr);
}
