// Writes the nano-program table as 64-bit little-endian words.

#include "sfc/nano_program.hpp"

#include <exception>
#include <iostream>

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: sfc_nanogen <output file>\n";
        return 2;
    }
    try {
        sfc::write_nano_table(argv[1], sfc::build_nano_table());
    } catch (const std::exception& e) {
        std::cerr << "sfc_nanogen: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
