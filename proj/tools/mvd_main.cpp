#include <iostream>
#include <string>
#include <vector>

#include "mvd/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return mvd::run_cli(args, std::cout, std::cerr);
}
