#include <iostream>

#include "degplus/cli.hpp"

int main(int argc, char** argv) { return degplus::run(argc, argv, std::cout, std::cerr); }
