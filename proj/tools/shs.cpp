#include <iostream>

#include "shs/cli/commands.hpp"

int main(int argc, char** argv) { return shs::cli::run(argc, argv, std::cout, std::cerr); }
