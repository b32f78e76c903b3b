#include <iostream>

#include "algdiag_cli/cli.hpp"

int main(int argc, char** argv) { return algdiag::cli::run_cli(argc, argv, std::cout, std::cerr); }
