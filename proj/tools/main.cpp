#include <iostream>

#include "extri/cli.hpp"

int main(int argc, char** argv)
{
    return extri::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
