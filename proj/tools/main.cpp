#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return gendef::run_cli(argc, argv, std::cout, std::cerr); }
