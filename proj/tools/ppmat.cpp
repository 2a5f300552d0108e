#include <iostream>

#include <ppmat/cli.hpp>

int main(int argc, char** argv) { return ppmat::cli::run_cli(argc, argv, std::cout, std::cerr, std::cin); }
