#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return halving::cli::run(argc, argv, std::cout, std::cerr); }
