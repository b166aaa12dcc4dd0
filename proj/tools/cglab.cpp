#include <iostream>

#include "cglab/cli.hpp"

int main(int argc, char** argv) { return cglab::run_cli(argc, argv, std::cout, std::cerr); }
