#include <iostream>
#include <vector>

#include "bouquet_kit/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return bouquet_kit::run_command(args, std::cout, std::cerr);
}
