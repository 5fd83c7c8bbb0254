#include <iostream>

#include "symnet/cli.hpp"

int main(int argc, char** argv) { return symnet::RunCli(argc, argv, std::cout, std::cerr); }
