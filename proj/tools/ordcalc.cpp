#include <iostream>

#include "ordcalc_cli.hpp"

int main(int argc, char** argv) { return ordcalc::cli::run(argc, argv, std::cout, std::cerr); }
