#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const auto report = resgame::cli::run(args);
  std::cout << report.out;
  std::cerr << report.err;
  return report.exit_code;
}
