#include "boxmode/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return boxmode::cli::run(argc, argv, std::cout, std::cerr);
}
