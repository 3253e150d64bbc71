#include <iostream>

#include "dp5/cli.hpp"

int main(int argc, char** argv) { return dp5::run_cli(argc, argv, std::cout, std::cerr); }
