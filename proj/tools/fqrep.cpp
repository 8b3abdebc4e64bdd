#include <iostream>

#include "fqrep/cli/commands.hpp"

int main(int argc, char** argv) { return fqrep::cli::run(argc, argv, std::cout, std::cerr); }
