#include <iostream>

#include "extalg/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return extalg::cli::run(args, std::cout, std::cerr);
}
