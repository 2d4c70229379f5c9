#include <iostream>

#include "cmm/cli.hpp"

int main(int argc, char** argv) { return cmm::cli_main(argc, argv, std::cout, std::cerr); }
