#include <iostream>
#include <string>
#include <vector>

#include "kwb/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return kwb::run_cli(args, std::cout, std::cerr);
}
