#include <iostream>

#include "kwc/cli.hpp"

int main(int argc, char** argv) { return kwc::cli::dispatch(argc, argv, std::cout, std::cerr); }
