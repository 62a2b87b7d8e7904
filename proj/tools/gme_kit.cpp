#include <iostream>

#include "gmekit/cli.hpp"

int main(int argc, char** argv) { return gmekit::cli::run(argc, argv, std::cout, std::cerr); }
