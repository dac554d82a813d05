#include <iostream>

#include "cabling/cli.hpp"

int main(int argc, char** argv) { return cabling::cli::run_cli(argc, argv, std::cout, std::cerr); }
