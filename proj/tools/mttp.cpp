#include <iostream>

#include "mttp/cli.hpp"

int main(int argc, char** argv) { return mttp::cli::run(argc, argv, std::cout, std::cerr); }
