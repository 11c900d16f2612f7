#include <iostream>

#include "pdr/cli.hpp"

int main(int argc, char** argv) { return pdr::cli::run(argc, argv, std::cout, std::cerr); }
