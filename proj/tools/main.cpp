#include <iostream>
#include <string>
#include <vector>

#include "cyclemax/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return cyclemax::cli::run(args, std::cin, std::cout, std::cerr);
}
