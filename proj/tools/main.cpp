#include <iostream>

#include "hyperclique/cli.hpp"
#include "hyperclique/errors.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return hyperclique::cli::run(args, std::cout, std::cerr);
  } catch (const hyperclique::InvariantBreach& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return hyperclique::cli::kExitFailed;
  }
}
