#include "nno/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return nno::cli::run(std::move(args), std::cout, std::cerr);
}
