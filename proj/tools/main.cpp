#include <iostream>

#include "circweb/cli.hpp"

int main(int argc, char** argv) { return circweb::cli::run(argc, argv, std::cout, std::cerr); }
