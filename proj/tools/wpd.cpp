#include <iostream>

#include "wpd/cli.hpp"

int main(int argc, char** argv) { return wpd::cli::main(argc, argv, std::cout, std::cerr); }
