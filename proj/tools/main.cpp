#include <iostream>

#include "dupcodes/cli.hpp"

int main(int argc, char** argv) { return dupcodes::run_cli(argc, argv, std::cout, std::cerr); }
