#include "wulab/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return wulab::run_cli({argv, argv + argc}, std::cout, std::cerr); }
