#include "delpezzo/cli.hpp"

#include <iostream>

int main(int argc, char **argv) { return dp::cli_main(argc, argv, std::cout, std::cerr); }
