#include <iostream>

#include "quadalg/cli.hpp"

int main(int argc, char** argv) { return quadalg::cli::run(argc, argv, std::cout, std::cerr); }
