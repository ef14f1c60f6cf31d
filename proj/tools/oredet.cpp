#include <iostream>
#include <string>
#include <vector>

#include "oredet/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return oredet::run_command(args, std::cout, std::cerr);
}
