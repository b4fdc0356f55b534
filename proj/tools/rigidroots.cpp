#include "rigidroots/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return rigid::cli::run(argc, argv, std::cout, std::cerr); }
