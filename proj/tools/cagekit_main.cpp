#include <iostream>

#include "cagekit/cli.hpp"

int main(int argc, char** argv) { return cagekit::run_cli(argc, argv, std::cout, std::cerr); }
