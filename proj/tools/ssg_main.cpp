#include <iostream>

#include "ssg/cli.hpp"

int main(int argc, char** argv) { return ssg::cli_main(argc, argv, std::cout, std::cerr); }
