#include <iostream>

#include "transroots/cli.hpp"

int main(int argc, char** argv) {
    return transroots::cli_run(argc, argv, std::cout, std::cerr);
}
