#include <iostream>

#include "ccover/cli.hpp"

int main(int argc, char** argv) {
    return ccover::cli::run(argc, argv, std::cout, std::cerr);
}
