#include <iostream>
#include <string>
#include <vector>

#include "ncfrob/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ncfrob::cli::run_cli(args, std::cout, std::cerr);
}
