#include <iostream>

#include "locus/cli.hpp"

int main(int argc, char** argv) { return locus::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
