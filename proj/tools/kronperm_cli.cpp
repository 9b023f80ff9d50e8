#include "kronperm/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return kronperm::cli::run(argc, argv, std::cout, std::cerr); }
