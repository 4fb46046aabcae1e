#include "peirce/cli.hpp"

int main(int argc, char** argv) {
  return peirce::cli::run(argc, argv);
}
