#include <meanbound/cli.hpp>

#include <iostream>

int main(int argc, char** argv) {
    return meanbound::cli::run(argc, argv, std::cout, std::cerr);
}
