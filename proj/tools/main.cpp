#include <iostream>
#include <string>
#include <vector>

#include "dicke2p/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return dicke2p::cli::run(args, std::cout, std::cerr);
}
