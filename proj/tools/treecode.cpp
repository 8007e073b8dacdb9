#include <iostream>

#include "treecode/cli.hpp"

int main(int argc, char** argv) { return treecode::run(argc, argv, std::cout, std::cerr); }
