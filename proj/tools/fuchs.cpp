#include <iostream>
#include <string>
#include <vector>

#include "fuchs/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return fuchs::cli::run(args, std::cout, std::cerr);
}
