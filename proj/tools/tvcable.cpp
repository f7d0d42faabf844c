#include <iostream>

#include "tvcable/cli.hpp"

int main(int argc, char** argv) { return tvcable::cli_main(argc, argv, std::cout, std::cerr); }
