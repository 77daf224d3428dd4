#include <iostream>

#include "gstab/cli.hpp"

int main(int argc, char **argv) { return gstab::run_cli(argc, argv, std::cout, std::cerr); }
