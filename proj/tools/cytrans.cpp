#include <iostream>

#include "cytrans/cli.hpp"

int main(int argc, char** argv) { return cytrans::run(argc, argv, std::cout, std::cerr); }
