#include <iostream>

#include "crcs/cli.hpp"

int main(int argc, char** argv)
{
    return crcs::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
