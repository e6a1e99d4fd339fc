#include "zonotopal/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return zonotopal::cli::main(argc, argv, std::cout, std::cerr); }
