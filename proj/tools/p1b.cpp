#include <iostream>

#include "p1b/cli.hpp"

int main(int argc, char** argv) {
    return p1b::cli::run(argc, argv, std::cout, std::cerr);
}
