#include <iostream>
#include <vector>

#include "etaq/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return etaq::run_cli(args, std::cout, std::cerr);
}
