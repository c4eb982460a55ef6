#include <iostream>
#include <string>
#include <vector>

#include "ztriv/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ztriv::cli::run(std::move(args), std::cout, std::cerr);
}
