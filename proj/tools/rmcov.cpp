#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "rmcov/cli.hpp"

int main(int argc, char** argv)
{
    std::setvbuf(stdout, nullptr, _IOLBF, 0);
    std::vector<std::string> args(argv + 1, argv + argc);
    return rmcov::cli::main_entry(args, std::cout, std::cerr);
}
