#include <string>
#include <vector>

#include "qlam/cli.hpp"

int main(int argc, char** argv) {
  return qlam::run_cli(std::vector<std::string>(argv + 1, argv + argc));
}
