#include <iostream>

#include "superhyp/cli.hpp"

int main(int argc, char** argv) { return superhyp::cli::run(argc, argv, std::cout, std::cerr); }
