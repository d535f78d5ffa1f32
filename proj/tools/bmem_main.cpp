#include <iostream>
#include <string>
#include <vector>

#include "bmem/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return bmem::run_cli(std::move(args), std::cout, std::cerr);
}
