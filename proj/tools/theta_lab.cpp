#include <iostream>
#include <string>
#include <vector>

#include "thetalab/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return thetalab::run_cli(args, std::cout, std::cerr);
}
