#include <iostream>

#include "xlag/cli/cli.hpp"

int main(int argc, char** argv) { return xlag::cli::run(argc, argv, std::cout, std::cerr); }
