#include <iostream>

#include "fsys/cli.hpp"

int main(int argc, char** argv) { return fsys::run_cli(argc, argv, std::cout, std::cerr); }
