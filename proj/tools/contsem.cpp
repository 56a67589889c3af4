#include <iostream>

#include "contsem/cli.hpp"

int main(int argc, char** argv) { return contsem::main_entry(argc, argv, std::cout, std::cerr); }
