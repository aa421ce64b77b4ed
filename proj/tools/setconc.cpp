#include <iostream>

#include "setconc/cli.hpp"

int main(int argc, char** argv) { return setconc::cli::run(argc, argv, std::cout, std::cerr); }
