#include <iostream>

#include "covariant/cli.hpp"

int main(int argc, char** argv) { return covariant::run_cli(argc, argv, std::cout, std::cerr); }
