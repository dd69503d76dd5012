#include <iostream>

#include "rankagg/cli/commands.hpp"

int main(int argc, char** argv) { return rankagg::cli::run(argc, argv, std::cout, std::cerr); }
