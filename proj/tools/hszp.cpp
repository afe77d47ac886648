#include <iostream>

#include "hsz/cli.hpp"

int main(int argc, char** argv) { return hsz::run_cli(argc, argv, std::cout, std::cerr); }
