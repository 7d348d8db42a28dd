#include "bac/cli.hpp"

int main(int argc, char** argv) {
  return bac::cli::run(argc, argv, std::cout, std::cerr);
}
