#include <iostream>

#include "detmult/cli.hpp"

int main(int argc, char** argv) { return detmult::run_cli(argc, argv, std::cout, std::cerr); }
