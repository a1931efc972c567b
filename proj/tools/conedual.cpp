#include <iostream>

#include "conedual/cli.hpp"

int main(int argc, char** argv)
{
    return conedual::cli::run({argv + 1, argv + argc}, std::cin, std::cout, std::cerr);
}
