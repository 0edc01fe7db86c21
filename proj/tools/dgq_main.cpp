#include <iostream>

#include "dgq/cli.hpp"

int main(int argc, char** argv) { return dgq::run_cli(argc, argv, std::cout, std::cerr); }
