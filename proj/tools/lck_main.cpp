#include "lck/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return lck::run(argc, argv, std::cout, std::cerr); }
