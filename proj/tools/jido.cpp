#include <iostream>

#include "jido/cli.hpp"

int main(int argc, char** argv) { return jido::cli::run(argc, argv, std::cout, std::cerr); }
