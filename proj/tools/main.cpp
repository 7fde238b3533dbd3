#include "periodlab/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return periodlab::cli::run(argc, argv, std::cout, std::cerr); }
