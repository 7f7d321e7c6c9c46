#include <iostream>

#include "tdom/cli.hpp"

int main(int argc, char** argv) { return tdom::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
