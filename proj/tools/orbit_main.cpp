#include <iostream>

#include "orbit/cli.hpp"

int main(int argc, char** argv)
{
    return orbit::cli::run(argc, argv, std::cout, std::cerr);
}
