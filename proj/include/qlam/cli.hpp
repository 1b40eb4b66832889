#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace qlam {

/// Command-line entry point. Exit codes: 0 success, 1 usage error, 2 input
/// data error. Error text goes to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out = std::cout,
            std::ostream& err = std::cerr);

}  // namespace qlam
