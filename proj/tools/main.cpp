#include <iostream>
#include <string>
#include <vector>

#include "respoly/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return respoly::run_cli(args, std::cout, std::cerr);
}
