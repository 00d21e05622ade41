#include "ffsync/cli_app.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return ffsync::cli_main(argc, argv, std::cout, std::cerr);
}
