#include <iostream>

#include "ginvlab/cli.hpp"

int main(int argc, char** argv) { return ginvlab::run_cli(argc, argv, std::cout, std::cerr); }
