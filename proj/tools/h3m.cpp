#include <iostream>

#include "h3m/cli.hpp"

int main(int argc, char** argv) { return h3m::run_cli(argc, argv, std::cout, std::cerr); }
