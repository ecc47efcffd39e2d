#include <iostream>

#include "epsnc/cli.hpp"

int main(int argc, char** argv) { return epsnc::run_cli(argc, argv, std::cout, std::cerr); }
