#include <iostream>

#include "toriq/cli.hpp"

int main(int argc, char** argv) { return toriq::run_cli(argc, argv, std::cout, std::cerr); }
