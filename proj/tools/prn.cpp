#include <iostream>

#include "prn/cli.hpp"

int main(int argc, char** argv) { return prn::run_cli(argc, argv, std::cin, std::cout, std::cerr); }
