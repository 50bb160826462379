#include <iostream>

#include "dgcat/cli.hpp"

int main(int argc, char** argv)
{
    return dgcat::run_cli(argc, argv, std::cout, std::cerr);
}
