#include <esb/cli.hpp>

#include <iostream>

int main(int argc, char** argv) { return esb::cli::run(argc, argv, std::cout, std::cerr); }
