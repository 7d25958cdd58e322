#include <iostream>

#include "cy3/cli.hpp"

int main(int argc, char** argv) {
    return cy3::run_cli(argc, argv, std::cout, std::cerr);
}
