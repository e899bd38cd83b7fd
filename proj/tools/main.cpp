#include <iostream>

#include "lieconserve/cli.hpp"

int main(int argc, char** argv) {
  return lieconserve::cli::run(argc, argv, std::cout, std::cerr);
}
