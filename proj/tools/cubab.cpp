#include <iostream>
#include <string>
#include <vector>

#include "cubab/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return cubab::run(args, std::cout, std::cerr);
}
