#include "sfc/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return sfc::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
