#include <iostream>

#include "pcascade/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return pcascade::cli::run(args, std::cout, std::cerr);
}
