// hyperk3 command-line tool.
#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return hk3::cli::run(args, std::cout, std::cerr);
}
