#include <iostream>
#include <string>
#include <vector>

#include "spanlf/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return spanlf::run_cli(args, std::cin, std::cout, std::cerr);
}
