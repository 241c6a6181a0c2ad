#include <iostream>

#include "codemetrics/cli.hpp"

int main(int argc, char** argv) { return codemetrics::main_entry(argc, argv, std::cout, std::cerr); }
