#include "aesec/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return aesec::run_cli(argc, argv, std::cout, std::cerr);
}
