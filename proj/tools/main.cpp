#include <string>
#include <vector>

#include "envsieve/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return envsieve::run_cli(args);
}
