#include "hocc/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return hocc::cli::run(argc, argv, std::cout, std::cerr); }
