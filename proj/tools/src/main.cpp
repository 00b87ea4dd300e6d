#include <iostream>

#include "ecgame_cli/app.hpp"

int main(int argc, char **argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ecgame::cli::run(args, std::cout, std::cerr);
}
