#include <coxl2_tool/cli.hpp>

#include <iostream>

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return coxl2::tool::run(args, std::cout, std::cerr);
}
