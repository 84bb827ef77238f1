#include <iostream>
#include <string>
#include <vector>

#include "flipbraid_cli/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return flipbraid::cli::run_cli(args, std::cout, std::cerr);
}
