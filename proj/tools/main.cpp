#include <string>
#include <vector>

#include "imbcluster/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return imbcluster::run_cli(args);
}
